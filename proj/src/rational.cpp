#include "eqcoh/rational.hpp"

#include "eqcoh/errors.hpp"

#include <cctype>

namespace eqcoh {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) throw InputError("invalid rational literal: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

} // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw InputError("invalid rational literal: '" + std::string(text) + "'");
    return Rat(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

} // namespace eqcoh
