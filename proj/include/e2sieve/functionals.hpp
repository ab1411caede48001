#pragma once

#include "e2sieve/bigrational.hpp"
#include "e2sieve/loglinear.hpp"
#include "e2sieve/sympoly.hpp"
#include "e2sieve/testfunction.hpp"

#include <string>
#include <vector>

namespace e2sieve {

/// Sieve knobs: dimension k, target count rho, level of distribution theta,
/// the R-shrinking delta (R = N^(theta/2 - delta)) and the beta cutoff eta
/// (Y = N^eta).
struct SieveParams {
    unsigned k = 2;
    long rho = 1;
    BigRational theta{1};
    BigRational delta{0};
    BigRational eta{BigRational(1, 10)};

    /// theta - 2 delta.
    [[nodiscard]] BigRational theta_prime() const { return theta - BigRational(2) * delta; }
    /// theta/2 - delta, the exponent of R and the upper end of the xi range.
    [[nodiscard]] BigRational sieve_exponent() const { return theta / BigRational(2) - delta; }

    /// Throws DomainError unless 0 < eta < 1/4, eta < theta/2 - delta,
    /// theta in (0, 1], delta >= 0, theta' > 0, rho >= 1, k >= 2.
    void validate() const;
};

enum class FunctionalKind { L, M };
enum class Variant { S, Sprime };

std::string to_string(FunctionalKind kind);
std::string to_string(Variant v);

/// Inner xi-functional stored through its polynomial part G in the variable
/// a = xi / (theta/2 - delta): the value is G(a)/(1-a) for L and
/// G(a)/(1-a)^2 for M.
struct InnerFunctional {
    unsigned m = 1;
    FunctionalKind kind = FunctionalKind::L;
    SymPoly G;  // over {"a"}

    [[nodiscard]] unsigned denominator_power() const { return kind == FunctionalKind::L ? 1 : 2; }
};

/// F with u_m replaced by a + (1-a) u_m, over u1..uk and "a".
SymPoly substitute_m_delta(const TestFunction& F, unsigned m, const SieveParams& params);

InnerFunctional inner_L(const TestFunction& F, unsigned m, const SieveParams& params);
InnerFunctional inner_M(const TestFunction& F, unsigned m, const SieveParams& params);

/// Inner functional of F times the indicator of the box [0, side]^k. Over
/// the outer range a >= eta/(theta/2 - delta); when that bound is >= side the
/// shifted coordinate a + (1-a)u_m never lies in the box and the result is
/// identically 0. Boxes reaching into the outer range are not supported.
InnerFunctional inner_box(const TestFunction& F, unsigned m, const SieveParams& params, FunctionalKind kind,
                          const BigRational& side);

/// Closed-form outer integrals over xi in [eta, theta/2 - delta]. An empty
/// range (eta == theta/2 - delta) gives 0; eta beyond it is an error.
LogLinear outer_L(const InnerFunctional& inner, const SieveParams& params);
LogLinear outer_M(const InnerFunctional& inner, const SieveParams& params);
LogLinear outer(const InnerFunctional& inner, const SieveParams& params);

/// Adaptive quadrature of the same outer integrand, written in its original
/// (uncancelled) form. tol >= 1e-13.
double quad_outer(const InnerFunctional& inner, const SieveParams& params, double tol);

/// log((1 - eta)/eta) for 0 < eta < 1/4.
LogLinear lemma41_constant(const BigRational& eta);

struct LeadingCoefficient {
    struct Breakdown {
        LogLinear L_term;    // -theta' * sum_m L^(m)
        LogLinear J_term;    // theta'^2/4 * c_eta * sum_m J^(m)
        LogLinear M_term;    // sum_m M^(m)
        LogLinear rho_term;  // -rho theta'/2 * I
    };

    LogLinear value;
    Variant variant = Variant::S;
    SieveParams params;
    Breakdown breakdown;

    BigRational I;
    std::vector<BigRational> J;  // index m-1
    std::vector<LogLinear> L;
    std::vector<LogLinear> M;
};

/// Coefficient whose positivity makes S(N, rho) (variant S) or S'(N, rho)
/// (variant Sprime) grow; every m is computed independently.
LeadingCoefficient leading_coefficient(const TestFunction& F, const SieveParams& params, Variant variant);

}  // namespace e2sieve
