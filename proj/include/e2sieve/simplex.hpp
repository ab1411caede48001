#pragma once

#include "e2sieve/bigrational.hpp"
#include "e2sieve/testfunction.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace e2sieve {

/// Integral of prod u_i^{a_i} over the k-simplex: prod a_i! / (k + sum a_i)!.
/// An empty exponent vector (k = 0) integrates over a point and gives 1.
BigRational monomial_simplex_integral(std::span<const unsigned> exponents);

/// Integral of p over the standard simplex in all of p's variables.
BigRational simplex_integral(const SymPoly& p);

enum class IntegralKind { I, J };

struct SimplexIntegralResult {
    BigRational value;
    unsigned k = 0;
    IntegralKind kind = IntegralKind::I;
    std::optional<unsigned> m;  // set for J
};

/// I_k(F): integral of F^2 over R_k.
SimplexIntegralResult I_k(const TestFunction& F);

/// J_k^(m)(F): integral over R_{k-1} of (int_0^{1-s} F du_m)^2, s the sum of
/// the other coordinates. 1 <= m <= k.
SimplexIntegralResult J_k_m(const TestFunction& F, unsigned m);

/// Marginal int_0^{1 - sum_{i != m} u_i} F du_m as a polynomial in the other
/// k-1 coordinates.
SymPoly marginal(const TestFunction& F, unsigned m);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of I (m empty) or J^(m) from uniform simplex samples
/// generated by sorted-uniform spacings. For J the squared inner integral is
/// estimated without bias as (1-s)^2 F(t1) F(t2), t1, t2 ~ U[0, 1-s].
MonteCarloEstimate mc_simplex_integral(const TestFunction& F, std::optional<unsigned> m,
                                       std::uint64_t samples, std::uint64_t seed);

}  // namespace e2sieve
