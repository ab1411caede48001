#pragma once

#include "e2sieve/bigrational.hpp"

#include <mpfr.h>

#include <string>

namespace e2sieve {

/// Owning MPFR value with a fixed binary precision. Binary operations produce
/// a result at the larger of the operand precisions, rounded to nearest unless
/// a directed mode is requested through the free functions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 256);
    BigFloat(long v, mpfr_prec_t bits);
    BigFloat(const BigRational& v, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const mpz_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    /// The exact dyadic rational held by this value.
    [[nodiscard]] BigRational to_rational() const;
    [[nodiscard]] mpz_class floor() const;

    /// Round-to-nearest decimal with `digits` significant digits, formatted
    /// like BigRational::to_decimal.
    [[nodiscard]] std::string to_decimal(int digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigFloat log(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log1p(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat expm1(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat abs(const BigFloat& x);

/// ln(q) for a positive rational, correctly rounded in direction `rnd`.
BigFloat log_rational(const BigRational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

/// Smallest number of bits giving at least `digits` decimal digits plus
/// `guard` extra bits.
mpfr_prec_t bits_for_digits(int digits, int guard = 32);

}  // namespace e2sieve
