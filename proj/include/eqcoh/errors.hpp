#pragma once

#include <stdexcept>
#include <string>

namespace eqcoh {

// Malformed or structurally invalid input (bad JSON, wrong shapes, dangling
// endpoints, non-bijective permutations).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical hypothesis required by an operation does not hold for the
// given (well-formed) data. `code()` is a stable machine-readable tag.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// An internal consistency assertion failed. Never expected; indicates a bug.
class AssertionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw AssertionFailure(what);
}

} // namespace eqcoh
