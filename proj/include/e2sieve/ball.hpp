#pragma once

#include "e2sieve/bigfloat.hpp"
#include "e2sieve/bigrational.hpp"

#include <string>

namespace e2sieve {

/// Real number known to lie in [mid - rad, mid + rad]. The midpoint is an
/// exact rational, so identities that only rearrange sums and products of
/// the same midpoints hold exactly; the radius carries all rounding and
/// approximation error.
class Ball {
public:
    Ball() = default;
    Ball(BigRational mid, BigRational rad = BigRational(0));
    static Ball exact(const BigRational& v) { return Ball(v); }

    [[nodiscard]] const BigRational& mid() const { return mid_; }
    [[nodiscard]] const BigRational& rad() const { return rad_; }
    [[nodiscard]] BigRational lower() const { return mid_ - rad_; }
    [[nodiscard]] BigRational upper() const { return mid_ + rad_; }
    [[nodiscard]] bool contains(const BigRational& x) const { return (x - mid_).abs() <= rad_; }
    [[nodiscard]] bool contains_zero() const { return mid_.abs() <= rad_; }
    [[nodiscard]] double to_double() const { return mid_.to_double(); }

    /// Rounds the midpoint to `bits` significant bits (ties to even) and
    /// widens the radius by the rounding error. Commutes with scaling by
    /// powers of two and with negation.
    [[nodiscard]] Ball rounded(unsigned bits) const;

    Ball& operator+=(const Ball& o);
    Ball& operator-=(const Ball& o);
    Ball& operator*=(const Ball& o);
    friend Ball operator+(Ball a, const Ball& b) { return a += b; }
    friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
    friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
    Ball operator-() const { return Ball(-mid_, rad_); }
    /// Division by an exact nonzero rational.
    [[nodiscard]] Ball divided_by(const BigRational& d) const;

    /// "mid +/- rad" with the midpoint at `digits` significant digits.
    [[nodiscard]] std::string to_string(int digits = 20) const;

private:
    BigRational mid_;
    BigRational rad_;
};

/// Certified ball around ln(n) / ln(R) for integers n >= 1, R >= 2 with
/// `bits` of working precision.
Ball log_ratio_ball(const mpz_class& n, const mpz_class& R, unsigned bits);

}  // namespace e2sieve
