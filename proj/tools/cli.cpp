#include "cli.hpp"

#include "eqcoh/errors.hpp"
#include "eqcoh/fixtures.hpp"
#include "eqcoh/json_io.hpp"
#include "eqcoh/verify.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace eqcoh::cli {

using io::Json;

namespace {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

// Records the input's digest in `inputs` before parsing, so malformed files
// are still identified in the report.
Json load(const std::string& path, Json& inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    inputs.push_back(Json{{"path", path}, {"sha256", sha256_hex(bytes)}});
    return io::parse(bytes, path);
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_text(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

struct Report {
    Json doc;
    bool text = false;

    explicit Report(const std::string& command) {
        doc["command"] = command;
        doc["args"] = Json::object();
        doc["inputs"] = Json::array();
        doc["status"] = "ok";
        doc["results"] = Json::object();
        doc["assertions"] = Json::object();
    }

    Json& results() { return doc["results"]; }

    bool all_assertions_hold() const {
        const auto& a = doc["assertions"];
        return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.get<bool>(); });
    }

    void emit(std::ostream& out) const {
        if (text)
            print_text(doc, "", out);
        else
            out << doc.dump(2) << "\n";
    }
};

int fail(Report& report, std::ostream& out, std::ostream& err, int code, const std::string& status, Json error) {
    report.doc["status"] = status;
    report.doc["error"] = std::move(error);
    report.emit(out);
    err << "error: " << report.doc["error"].value("message", std::string("see report")) << "\n";
    return code;
}

int finish(Report& report, std::ostream& out) {
    const bool ok = report.all_assertions_hold();
    if (!ok) report.doc["status"] = "violation";
    report.emit(out);
    return ok ? kOk : kViolation;
}

// Runs `body`, mapping the library's exception types onto exit codes.
template <class Body>
int guarded(Report& report, std::ostream& out, std::ostream& err, Body body) {
    try {
        return body();
    } catch (const InputError& e) {
        return fail(report, out, err, kInputError, "input-error", Json{{"kind", "input"}, {"message", e.what()}});
    } catch (const PreconditionError& e) {
        return fail(report, out, err, kPrecondition, "precondition-failed",
                    Json{{"kind", "precondition"}, {"condition", e.code()}, {"message", e.what()}});
    } catch (const AssertionFailure& e) {
        return fail(report, out, err, kViolation, "violation", Json{{"kind", "assertion"}, {"message", e.what()}});
    }
}

Json torsion_json(const TorsionCheck& t) {
    if (t.vacuous()) return "vacuous";
    return Json{{"generators_checked", t.generators_checked}, {"holds", t.holds}};
}

Json vectors_json(const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(io::to_json(v));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, Report& report, std::ostream& out, std::ostream& err) {
    return guarded(report, out, err, [&] {
        const Json in = load(path, report.doc["inputs"]);
        const LinearInstance inst = io::instance_from_json(in);
        const ValidationReport validation = validate(inst);
        if (!validation.ok()) {
            Json issues = Json::array();
            for (const auto& issue : validation.issues)
                issues.push_back(Json{{"kind", to_string(issue.kind)},
                                      {"generator", issue.generator ? Json(*issue.generator) : Json(nullptr)},
                                      {"message", issue.message}});
            return fail(report, out, err, kInputError, "input-error",
                        Json{{"kind", "validation"}, {"message", "instance failed validation"}, {"issues", issues}});
        }

        const IffReport iff = verify_iff(inst);
        const QuotientResult q = oracle_quotient_dim(inst);
        Json& r = report.results();
        r["dim_U"] = inst.dim_U;
        r["dim_W"] = inst.dim_W;
        r["m"] = iff.m;
        r["d"] = iff.d;
        r["md"] = iff.md();
        r["dim"] = iff.dim;
        r["dim_invariant_image"] = q.invariant_image.dim();
        r["dim_image_of_invariants"] = q.image_of_invariants.dim();
        r["condition_i"] = iff.condition_i;
        r["condition_ii"] = iff.condition_ii;
        r["equality"] = iff.dim == iff.md();
        report.doc["assertions"]["bound"] = iff.bound_holds;
        report.doc["assertions"]["iff"] = iff.iff_holds;

        if (iff.condition_i) {
            const auto kernel = kernel_of_pi(inst).basis_vectors();
            r["kernel_basis"] = vectors_json(kernel);
            const bool commute = check_lemma_commutation(inst);
            r["lemma_commutation"] = commute;
            const TorsionCheck torsion = check_torsion_trivial(inst);
            r["torsion"] = torsion_json(torsion);
            const auto ujk = find_ujk(inst, kernel);
            r["u_jk_found"] = ujk.has_value();
            if (ujk) {
                Json rows = Json::array();
                for (const auto& row : *ujk) rows.push_back(vectors_json(row));
                r["u_jk"] = std::move(rows);
            }
            report.doc["assertions"]["lemma_commutation"] = commute;
            report.doc["assertions"]["torsion_trivial"] = torsion.holds;
            report.doc["assertions"]["u_jk_iff_condition_ii"] = ujk.has_value() == iff.condition_ii;
        }
        r["notes"] = Json::array({"generators are taken as given; if they stand for the free part of the "
                                  "abelianization, that is trusted, not certified"});
        return finish(report, out);
    });
}

int cmd_graph(const std::string& graph_path, const std::string& action_path, Report& report, std::ostream& out,
              std::ostream& err) {
    return guarded(report, out, err, [&] {
        const Json gin = load(graph_path, report.doc["inputs"]);
        const Json ain = load(action_path, report.doc["inputs"]);
        const Graph g = io::graph_from_json(gin);
        const GraphAction act = io::action_from_json(ain);
        validate_action(g, act);

        Json& r = report.results();
        r["vertices"] = g.num_vertices();
        r["edges"] = g.num_edges();
        Json warnings = Json::array();
        for (auto li : g.loop_indices())
            warnings.push_back("edge " + std::to_string(g.edge(li).id) + " is a loop; its 1-cochain value is forced to 0");
        r["warnings"] = std::move(warnings);

        const GraphActionReport a = analyze_graph_action(g, act);
        r["components"] = a.m;
        r["generators"] = a.d;
        r["group_order"] = a.checks.group_order;
        r["automorphism"] = a.checks.is_automorphism;
        r["free"] = a.checks.is_free;
        r["closed_in_components"] = a.checks.is_closed_in_components;
        r["dim"] = a.iff.dim;
        r["md"] = a.iff.md();
        r["condition_i"] = a.iff.condition_i;
        r["condition_ii"] = a.iff.condition_ii;
        if (a.lemma_commutation) r["lemma_commutation"] = *a.lemma_commutation;
        if (a.torsion) r["torsion"] = torsion_json(*a.torsion);
        r["predicted_dim"] = a.predicted_dim;
        r["notes"] = a.notes;
        report.doc["assertions"]["bound"] = a.iff.bound_holds;
        report.doc["assertions"]["iff"] = a.iff.iff_holds;
        report.doc["assertions"]["finite_group_prediction"] = a.prediction_holds;
        report.doc["assertions"]["consistent"] = a.consistent();
        return finish(report, out);
    });
}

int cmd_periodic(const std::string& graph_path, const std::string& w_path, std::size_t radius, Report& report,
                 std::ostream& out, std::ostream& err) {
    return guarded(report, out, err, [&] {
        const Json gin = load(graph_path, report.doc["inputs"]);
        const Json win = load(w_path, report.doc["inputs"]);
        const PeriodicGraph pg = io::periodic_from_json(gin);
        const Cochain1 w = io::cochain1_from_json(win, pg.quotient());

        const auto lattices = period_lattices(pg);
        const bool closed = action_is_closed(pg);
        Json& r = report.results();
        r["d"] = pg.rank();
        r["quotient_vertices"] = pg.quotient().num_vertices();
        r["quotient_edges"] = pg.quotient().num_edges();
        r["components"] = lattices.size();
        Json lat = Json::array();
        Json lifts = Json::array();
        for (const auto& l : lattices) {
            lat.push_back(io::to_json(l.basis()));
            const auto idx = l.hermite.index();
            lifts.push_back(idx ? Json(idx->get_str()) : Json("infinite"));
        }
        r["period_lattices"] = std::move(lat);
        r["lift_components"] = std::move(lifts);
        r["free"] = true;
        r["action_closed"] = closed;
        r["invariant_closed"] = is_invariant_closed(pg, w);

        const PeriodicDecomposition dec = decompose_periodic(pg, w);
        const std::size_t md = pg.rank() * lattices.size();
        r["decomposition"] = io::to_json(dec, lattices, closed);
        r["md"] = md;
        r["realized_period_dim"] = realized_period_dim(pg);
        r["closed_quotient_dim"] = closed_quotient_dim(pg);
        const TruncationReport t = truncation_oracle(pg, w, dec, radius);
        Json tj{{"radius", t.radius}, {"cells", t.cells}, {"checks", t.checks}, {"mismatches", t.mismatches}};
        if (t.first_mismatch) tj["first_mismatch"] = *t.first_mismatch;
        r["truncation"] = std::move(tj);

        report.doc["assertions"]["reconstruction"] = reconstruct(pg, dec).values == w.values;
        report.doc["assertions"]["truncation"] = t.passed();
        report.doc["assertions"]["period_dim_is_md"] = r["realized_period_dim"].get<std::size_t>() == md;
        report.doc["assertions"]["closed_dim_is_md"] = r["closed_quotient_dim"].get<std::size_t>() == md;
        return finish(report, out);
    });
}

constexpr std::size_t kMaxReproducers = 10;

int cmd_verify(const verify::Options& opts, bool serial, const std::string& repro_dir, Report& report,
               std::ostream& out, std::ostream& err) {
    return guarded(report, out, err, [&] {
        if (opts.max_dim == 0) throw InputError("--max-dim must be at least 1");
        const verify::Report vr = serial ? verify::run_serial(opts) : verify::run(opts);
        std::size_t by_kind[2] = {0, 0};
        std::size_t equality = 0, cond_i = 0, cond_ii = 0, ujk = 0, decomposed = 0, lemma = 0, torsion = 0;
        Json violations = Json::array();
        for (const auto& o : vr.outcomes) {
            ++by_kind[o.kind == verify::Kind::Linear ? 0 : 1];
            if (o.iff.md() > 0 && o.iff.dim == o.iff.md()) ++equality;
            cond_i += o.iff.condition_i;
            cond_ii += o.iff.condition_ii;
            ujk += o.ujk_found;
            decomposed += o.decomposed;
            lemma += o.lemma_checked;
            torsion += o.torsion_checked > 0;
            if (o.ok()) continue;
            Json v{{"index", o.index}, {"kind", verify::to_string(o.kind)}, {"failures", o.failures}};
            if (violations.size() < kMaxReproducers) {
                const LinearInstance small = verify::minimize(o.instance, opts, {}, 2 * o.index + 1);
                const std::string file = (std::filesystem::path(repro_dir) /
                                          ("verify-repro-seed" + std::to_string(opts.seed) + "-" +
                                           std::to_string(o.index) + ".json"))
                                             .string();
                io::write_file(file, Json{{"seed", opts.seed},
                                          {"index", o.index},
                                          {"failures", o.failures},
                                          {"instance", io::to_json(small)}});
                v["reproducer"] = file;
            }
            violations.push_back(std::move(v));
        }
        Json& r = report.results();
        r["instances"] = vr.outcomes.size();
        r["linear_instances"] = by_kind[0];
        r["graph_instances"] = by_kind[1];
        r["equality_cases"] = equality;
        r["condition_i"] = cond_i;
        r["condition_ii"] = cond_ii;
        r["u_jk_found"] = ujk;
        r["decompositions"] = decomposed;
        r["lemma_checks"] = lemma;
        r["torsion_checks"] = torsion;
        r["violations"] = std::move(violations);
        report.doc["assertions"]["zero_violations"] = vr.violations() == 0;
        return finish(report, out);
    });
}

int cmd_fixtures(const std::vector<std::string>& fixture_names, const std::string& out_dir, bool list,
                 Report& report, std::ostream& out, std::ostream& err) {
    return guarded(report, out, err, [&] {
        report.results()["available"] = fixtures::names();
        if (list) return finish(report, out);
        if (fixture_names.empty()) throw InputError("no fixture name given");
        Json written = Json::array();
        std::filesystem::create_directories(out_dir);
        for (const auto& name : fixture_names) {
            for (const auto& [file, doc] : fixtures::files(name)) {
                const std::string path = (std::filesystem::path(out_dir) / file).string();
                io::write_file(path, doc);
                written.push_back(Json{{"file", path}, {"sha256", sha256_hex(doc.dump(2) + "\n")}});
            }
        }
        report.results()["written"] = std::move(written);
        return finish(report, out);
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant quotient dimensions and period decompositions for group actions", "eqcoh"};
    app.require_subcommand(1);

    bool text = false;
    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", "JSON report (default)");
        auto* t = sub->add_flag("--text", text, "flat key: value report");
        j->excludes(t);
    };

    std::string instance_path;
    auto* analyze = app.add_subcommand("analyze", "dimension criterion for a LinearInstance JSON file");
    analyze->add_option("instance", instance_path, "instance JSON")->required();
    add_format(analyze);

    std::string graph_path, action_path;
    auto* graph = app.add_subcommand("graph", "analyze a permutation action on a finite graph");
    graph->add_option("graph", graph_path, "graph JSON")->required();
    graph->add_option("action", action_path, "action JSON")->required();
    add_format(graph);

    std::string pgraph_path, w_path;
    std::size_t radius = 2;
    auto* periodic = app.add_subcommand("periodic", "decompose an invariant closed 1-form on a periodic graph");
    periodic->add_option("pgraph", pgraph_path, "periodic graph JSON")->required();
    periodic->add_option("w", w_path, "1-form JSON")->required();
    periodic->add_option("--radius", radius, "truncation oracle radius")->capture_default_str();
    add_format(periodic);

    verify::Options vopts;
    bool serial = false;
    std::string repro_dir = ".";
    auto* verify_cmd = app.add_subcommand("verify", "randomized property run");
    verify_cmd->add_option("--seed", vopts.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--count", vopts.count, "number of instances")->capture_default_str();
    verify_cmd->add_option("--max-dim", vopts.max_dim, "maximum dim U and dim W")->capture_default_str();
    verify_cmd->add_option("--max-generators", vopts.max_generators, "maximum generators")->capture_default_str();
    verify_cmd->add_flag("--serial", serial, "single-threaded reference run");
    verify_cmd->add_option("--repro-dir", repro_dir, "directory for reproducer files")->capture_default_str();
    add_format(verify_cmd);

    std::vector<std::string> fixture_names;
    std::string out_dir = ".";
    bool list = false;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "write canonical fixture files");
    fixtures_cmd->add_option("names", fixture_names, "fixture names");
    fixtures_cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    fixtures_cmd->add_flag("--list", list, "list fixture names");
    add_format(fixtures_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    auto make_report = [&](const std::string& name) {
        Report r(name);
        r.text = text;
        return r;
    };

    if (analyze->parsed()) {
        Report r = make_report("analyze");
        r.doc["args"] = Json{{"instance", instance_path}};
        return cmd_analyze(instance_path, r, out, err);
    }
    if (graph->parsed()) {
        Report r = make_report("graph");
        r.doc["args"] = Json{{"graph", graph_path}, {"action", action_path}};
        return cmd_graph(graph_path, action_path, r, out, err);
    }
    if (periodic->parsed()) {
        Report r = make_report("periodic");
        r.doc["args"] = Json{{"pgraph", pgraph_path}, {"w", w_path}, {"radius", radius}};
        return cmd_periodic(pgraph_path, w_path, radius, r, out, err);
    }
    if (verify_cmd->parsed()) {
        Report r = make_report("verify");
        r.doc["args"] = Json{{"seed", vopts.seed},
                             {"count", vopts.count},
                             {"max_dim", vopts.max_dim},
                             {"max_generators", vopts.max_generators}};
        return cmd_verify(vopts, serial, repro_dir, r, out, err);
    }
    Report r = make_report("fixtures");
    r.doc["args"] = Json{{"names", fixture_names}, {"out_dir", out_dir}};
    return cmd_fixtures(fixture_names, out_dir, list, r, out, err);
}

} // namespace eqcoh::cli
