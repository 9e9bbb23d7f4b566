#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace eqcoh {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; it exists so that expression
/// templates never leak into `auto` and so that every construction path
/// canonicalizes.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rat(const BigInt& n) : v_(n) {}                   // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);

    /// Accepts "p", "p/q", with optional leading sign. Throws InputError.
    static Rat parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] BigInt num() const { return v_.get_num(); }
    [[nodiscard]] BigInt den() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) {
        Rat r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

} // namespace eqcoh
