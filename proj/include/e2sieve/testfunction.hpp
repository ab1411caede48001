#pragma once

#include "e2sieve/sympoly.hpp"

#include <string_view>

namespace e2sieve {

/// A polynomial F(u1..uk) standing for the function equal to F on the simplex
/// R_k = {u_i >= 0, sum u_i <= 1} and to 0 outside it.
class TestFunction {
public:
    TestFunction(unsigned k, SymPoly poly);

    [[nodiscard]] unsigned k() const { return k_; }
    [[nodiscard]] const SymPoly& poly() const { return poly_; }
    [[nodiscard]] std::string to_string() const { return poly_.to_string(); }

    friend bool operator==(const TestFunction&, const TestFunction&) = default;

private:
    unsigned k_;
    SymPoly poly_;
};

/// Parses a polynomial expression with rational literals, + - * / ^ and
/// parentheses. Identifiers P<i> / Q<i> are power sums sum_j u_j^i, u<i> are
/// the coordinates themselves (1 <= i <= k). Division is only allowed by
/// constants.
SymPoly parse_formal_expression(std::string_view text, unsigned k);

/// Expands a formal power-sum expression into an explicit test function in
/// u1..uk.
TestFunction power_sum_build(unsigned k, std::string_view expression);

/// Same as above for an expression already given as a polynomial in the
/// variables P1..Pd.
TestFunction power_sum_build(unsigned k, const SymPoly& expression_in_power_sums);

}  // namespace e2sieve
