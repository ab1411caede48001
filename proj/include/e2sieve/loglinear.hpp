#pragma once

#include "e2sieve/bigfloat.hpp"
#include "e2sieve/bigrational.hpp"

#include <map>
#include <string>
#include <utility>

namespace e2sieve {

/// Exact value  c + sum_i r_i * ln(q_i)  with rational c, r_i and positive
/// rational q_i. Arguments are kept as given; canonicalization (coprime-basis
/// factoring) only happens for equality and zero tests.
class LogLinear {
public:
    using Terms = std::map<BigRational, BigRational>;  // argument -> coefficient

    LogLinear() = default;
    explicit LogLinear(BigRational constant) : constant_(std::move(constant)) {}

    /// coefficient * ln(argument). argument must be > 0.
    static LogLinear log_of(const BigRational& argument, const BigRational& coefficient = BigRational(1));

    [[nodiscard]] const BigRational& constant() const { return constant_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool has_logs() const { return !terms_.empty(); }

    LogLinear& operator+=(const LogLinear& o);
    LogLinear& operator-=(const LogLinear& o);
    LogLinear& operator*=(const BigRational& s);
    friend LogLinear operator+(LogLinear a, const LogLinear& b) { return a += b; }
    friend LogLinear operator-(LogLinear a, const LogLinear& b) { return a -= b; }
    friend LogLinear operator*(LogLinear a, const BigRational& s) { return a *= s; }
    friend LogLinear operator*(const BigRational& s, LogLinear a) { return a *= s; }
    LogLinear operator-() const { return *this * BigRational(-1); }

    /// Structural equality (same constant, same argument/coefficient pairs).
    friend bool operator==(const LogLinear& a, const LogLinear& b) = default;

    /// Rewrites every logarithm over a pairwise-coprime integer basis. Two
    /// values are equal as real numbers iff their canonical forms are
    /// structurally equal.
    [[nodiscard]] LogLinear canonical() const;
    [[nodiscard]] bool canonically_equal(const LogLinear& o) const;

    /// Certified enclosure [lo, hi] computed with `bits` of working precision.
    [[nodiscard]] std::pair<BigFloat, BigFloat> enclose(mpfr_prec_t bits) const;

    /// Exact sign: -1, 0 or +1.
    [[nodiscard]] int sign() const;

    [[nodiscard]] double to_double() const;
    [[nodiscard]] BigFloat evaluate(mpfr_prec_t bits) const;

    /// Correctly rounded decimal with `digits` (>= 15) significant digits.
    [[nodiscard]] std::string to_decimal(int digits) const;

    /// "r0 + r1*ln(p1/q1) - r2*ln(p2/q2) ...".
    [[nodiscard]] std::string to_string() const;

private:
    void add_term(const BigRational& argument, const BigRational& coefficient);

    BigRational constant_;
    Terms terms_;
};

}  // namespace e2sieve
