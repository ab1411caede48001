#pragma once

#include "e2sieve/bigrational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace e2sieve {

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables. Zero coefficients are never stored and
/// monomials are kept in lexicographic exponent order, so two equal
/// polynomials over the same variables compare equal structurally.
class SymPoly {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, BigRational>;

    SymPoly() = default;
    explicit SymPoly(std::vector<std::string> variables);

    static SymPoly constant(std::vector<std::string> variables, const BigRational& c);
    static SymPoly variable(std::vector<std::string> variables, std::string_view name);
    static SymPoly monomial(std::vector<std::string> variables, Exponents exponents, const BigRational& c);

    /// "u1", ..., "uk".
    static std::vector<std::string> standard_variables(std::size_t k, std::string_view prefix = "u");

    [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
    [[nodiscard]] std::size_t arity() const { return vars_.size(); }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    [[nodiscard]] std::size_t require_index(std::string_view name) const;

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] unsigned degree_in(std::size_t var) const;
    [[nodiscard]] BigRational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const BigRational& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const BigRational& s);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(SymPoly a, const BigRational& s) { return a *= s; }
    friend SymPoly operator*(const BigRational& s, SymPoly a) { return a *= s; }
    SymPoly operator-() const { return *this * BigRational(-1); }
    [[nodiscard]] SymPoly pow(unsigned e) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

    /// Exact evaluation; point.size() must equal arity().
    [[nodiscard]] BigRational eval(std::span<const BigRational> point) const;

    /// Replace variable `name` by `replacement` (a polynomial over the same
    /// variable list, or over a subset of it).
    [[nodiscard]] SymPoly substitute(std::string_view name, const SymPoly& replacement) const;

    /// Re-embed into another variable list. Every variable actually used by
    /// this polynomial must appear in `variables`.
    [[nodiscard]] SymPoly with_variables(std::vector<std::string> variables) const;

    /// Drop a variable the polynomial does not depend on.
    [[nodiscard]] SymPoly without_variable(std::string_view name) const;

    [[nodiscard]] SymPoly derivative(std::string_view name) const;

    /// Canonical text in graded order, e.g. "1 - u1 + 3/2*u1^2*u3".
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_variables(const SymPoly& o, const char* op) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Integral of f d(var) from `lower` to `upper`; the limits must not depend
/// on `var`. The result lives over f's variables with `var` removed.
SymPoly definite_integral_one_var(const SymPoly& f, std::string_view var, const SymPoly& lower,
                                  const SymPoly& upper);

/// Floating-point image of a SymPoly for Monte-Carlo and quadrature checks.
class NumericPoly {
public:
    explicit NumericPoly(const SymPoly& p);
    [[nodiscard]] long double operator()(std::span<const long double> point) const;
    [[nodiscard]] std::size_t arity() const { return arity_; }

private:
    struct Term {
        long double coef;
        std::vector<unsigned> exps;
    };
    std::size_t arity_ = 0;
    unsigned max_degree_ = 0;
    std::vector<Term> terms_;
};

}  // namespace e2sieve
