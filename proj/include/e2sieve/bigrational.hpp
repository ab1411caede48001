#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace e2sieve {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; no operation ever rounds.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpz_class& v) : q_(v) {}
    explicit BigRational(mpq_class v);

    /// Accepts "a", "a/b", "-1.25", "1e-10", "2.5E+3".
    static BigRational parse(std::string_view text);

    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] long double to_long_double() const;

    /// "a" or "a/b".
    [[nodiscard]] std::string to_string() const { return q_.get_str(); }

    /// Correctly rounded rendering with `digits` significant digits, ties to
    /// even. Zero renders as "0". Magnitudes outside [1e-5, 1e15) use
    /// scientific notation.
    [[nodiscard]] std::string to_decimal(int digits) const;

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
    [[nodiscard]] BigRational pow(unsigned e) const;
    [[nodiscard]] BigRational inverse() const;

private:
    mpq_class q_;
};

/// n! as an exact integer; values are cached and the cache is thread safe.
const mpz_class& factorial(unsigned n);

/// Decimal rendering shared by BigRational and high-precision floats: takes a
/// digit string (no sign, no leading zeros, exactly `digits` long) and the
/// decimal exponent of its first digit.
std::string format_decimal(bool negative, const std::string& mantissa, long exponent10);

}  // namespace e2sieve
