#include "e2sieve/functionals.hpp"

#include "e2sieve/error.hpp"
#include "e2sieve/quadrature.hpp"
#include "e2sieve/simplex.hpp"

#include <cmath>

namespace e2sieve {

void SieveParams::validate() const {
    if (k < 2) throw DomainError("SieveParams: k must be >= 2");
    if (rho < 1) throw DomainError("SieveParams: rho must be >= 1");
    if (theta.sign() <= 0 || theta > BigRational(1)) throw DomainError("SieveParams: theta must lie in (0, 1]");
    if (delta.sign() < 0) throw DomainError("SieveParams: delta must be >= 0");
    if (theta_prime().sign() <= 0) throw DomainError("SieveParams: theta - 2 delta must be > 0");
    if (eta.sign() <= 0 || eta >= BigRational(1, 4)) throw DomainError("SieveParams: eta must lie in (0, 1/4)");
    if (eta >= sieve_exponent())
        throw DomainError("SieveParams: eta must be below theta/2 - delta = " + sieve_exponent().to_string());
}

std::string to_string(FunctionalKind kind) { return kind == FunctionalKind::L ? "L" : "M"; }
std::string to_string(Variant v) { return v == Variant::S ? "S" : "Sprime"; }

namespace {

void check_m(const TestFunction& F, unsigned m, const char* who) {
    if (m < 1 || m > F.k())
        throw DomainError(std::string(who) + ": m=" + std::to_string(m) + " outside 1.." + std::to_string(F.k()));
}

std::vector<std::string> with_a(const TestFunction& F) {
    auto vars = F.poly().variables();
    vars.emplace_back("a");
    return vars;
}

// Integrates a polynomial P(u_others, a) over {u_i >= 0, sum u_i <= 1 - a}
// through u_i = (1-a) v_i, returning a polynomial in a alone.
SymPoly integrate_over_shrunken_simplex(const SymPoly& P) {
    const std::size_t ia = P.require_index("a");
    const std::vector<std::string> avar{"a"};
    const std::size_t dim = P.arity() - 1;

    // Collect sum over monomials of c * D(e) * a^{e_a}, grouped by |e|.
    std::vector<SymPoly> by_degree;
    std::vector<unsigned> others;
    for (const auto& [e, c] : P.terms()) {
        others.clear();
        unsigned deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == ia) continue;
            others.push_back(e[i]);
            deg += e[i];
        }
        if (by_degree.size() <= deg) by_degree.resize(deg + 1, SymPoly(avar));
        by_degree[deg].add_term({e[ia]}, c * monomial_simplex_integral(others));
    }

    const SymPoly one_minus_a = SymPoly::constant(avar, BigRational(1)) - SymPoly::variable(avar, "a");
    SymPoly G(avar);
    SymPoly scale = one_minus_a.pow(static_cast<unsigned>(dim));  // Jacobian (1-a)^dim
    for (std::size_t deg = 0; deg < by_degree.size(); ++deg) {
        if (deg > 0) scale = scale * one_minus_a;
        if (!by_degree[deg].is_zero()) G += by_degree[deg] * scale;
    }
    return G;
}

// First factor: integral of F over t in [a, 1 - s] (the (1-a)^-1 from the
// change of variable is carried by the stored denominator). Second factor:
// integral over [0, 1 - s].
std::pair<SymPoly, SymPoly> marginal_pair(const TestFunction& F, unsigned m) {
    const auto vars = with_a(F);
    const SymPoly f = F.poly().with_variables(vars);
    const std::string um = vars[m - 1];
    SymPoly upper = SymPoly::constant(vars, BigRational(1));
    for (unsigned i = 0; i < F.k(); ++i)
        if (i != m - 1) upper -= SymPoly::variable(vars, vars[i]);
    SymPoly shifted = definite_integral_one_var(f, um, SymPoly::variable(vars, "a"), upper);
    SymPoly plain = definite_integral_one_var(f, um, SymPoly::constant(vars, BigRational(0)), upper);
    return {std::move(shifted), std::move(plain)};
}

}  // namespace

SymPoly substitute_m_delta(const TestFunction& F, unsigned m, const SieveParams& /*params*/) {
    check_m(F, m, "substitute_m_delta");
    const auto vars = with_a(F);
    const std::string um = vars[m - 1];
    const SymPoly a = SymPoly::variable(vars, "a");
    const SymPoly one = SymPoly::constant(vars, BigRational(1));
    return F.poly().with_variables(vars).substitute(um, a + (one - a) * SymPoly::variable(vars, um));
}

InnerFunctional inner_L(const TestFunction& F, unsigned m, const SieveParams& /*params*/) {
    check_m(F, m, "inner_L");
    const auto [shifted, plain] = marginal_pair(F, m);
    return {m, FunctionalKind::L, integrate_over_shrunken_simplex(shifted * plain)};
}

InnerFunctional inner_M(const TestFunction& F, unsigned m, const SieveParams& /*params*/) {
    check_m(F, m, "inner_M");
    const auto [shifted, plain] = marginal_pair(F, m);
    return {m, FunctionalKind::M, integrate_over_shrunken_simplex(shifted * shifted)};
}

InnerFunctional inner_box(const TestFunction& F, unsigned m, const SieveParams& params, FunctionalKind kind,
                          const BigRational& side) {
    check_m(F, m, "inner_box");
    if (side.sign() <= 0) throw DomainError("inner_box: side must be > 0");
    const BigRational c = params.sieve_exponent();
    if (c.sign() <= 0) throw DomainError("inner_box: theta/2 - delta must be > 0");
    if (params.eta / c < side)
        throw DomainError("inner_box: box side " + side.to_string() + " reaches into the outer range a >= " +
                          (params.eta / c).to_string());
    return {m, kind, SymPoly(std::vector<std::string>{"a"})};
}

namespace {

using Dense = std::vector<BigRational>;

Dense to_dense(const SymPoly& g) {
    if (g.arity() != 1) throw DomainError("inner functional must be univariate");
    Dense d(g.is_zero() ? 0 : g.total_degree() + 1);
    for (const auto& [e, c] : g.terms()) d[e[0]] = c;
    return d;
}

void check_range(const SieveParams& p) {
    const BigRational c = p.sieve_exponent();
    if (c.sign() <= 0 || c >= BigRational(1)) throw DomainError("outer integral: theta/2 - delta must lie in (0, 1)");
    if (p.eta.sign() <= 0) throw DomainError("outer integral: eta must be > 0");
    if (p.eta > c) throw DomainError("outer integral: empty range, eta > theta/2 - delta");
}

}  // namespace

LogLinear outer(const InnerFunctional& inner, const SieveParams& params) {
    check_range(params);
    const BigRational c = params.sieve_exponent();
    const BigRational& eta = params.eta;
    if (eta == c) return LogLinear();

    // The weight (c - xi) or (c - xi)^2 cancels (1-a)^p up to c^p, leaving
    // P(xi) / (xi (1 - xi)) with P(xi) = c^p G(xi/c).
    const BigRational weight = inner.kind == FunctionalKind::L ? c : c * c;
    Dense P = to_dense(inner.G);
    BigRational cpow(1);
    for (auto& coef : P) {
        coef = weight * coef / cpow;
        cpow *= c;
    }
    if (P.empty()) return LogLinear();

    const BigRational p0 = P[0];
    BigRational p1;
    for (const auto& coef : P) p1 += coef;

    // R = P - p0 (1 - xi) - p1 xi vanishes at 0 and 1.
    Dense R = P;
    if (R.size() < 2) R.resize(2);
    R[0] -= p0;
    R[1] += p0 - p1;
    if (!R[0].is_zero()) throw std::logic_error("partial fractions: residual at 0");
    // R / xi
    Dense S(R.begin() + 1, R.end());
    // S / (xi - 1) by synthetic division, then negate for 1 - xi.
    Dense Q(S.size() > 1 ? S.size() - 1 : 0);
    BigRational carry;
    for (std::size_t i = S.size(); i-- > 0;) {
        const BigRational v = S[i] + carry;
        if (i == 0) {
            if (!v.is_zero()) throw std::logic_error("partial fractions: residual at 1");
        } else {
            Q[i - 1] = -v;
            carry = v;
        }
    }

    BigRational poly_part;
    BigRational c_pow = c, e_pow = eta;
    for (std::size_t j = 0; j < Q.size(); ++j) {
        poly_part += Q[j] * (c_pow - e_pow) / BigRational(static_cast<long>(j + 1));
        c_pow *= c;
        e_pow *= eta;
    }

    const BigRational one(1);
    LogLinear out(poly_part);
    out += LogLinear::log_of(c, p0);
    out += LogLinear::log_of(eta, -p0);
    out += LogLinear::log_of(one - eta, p1);
    out += LogLinear::log_of(one - c, -p1);
    return out;
}

LogLinear outer_L(const InnerFunctional& inner, const SieveParams& params) {
    if (inner.kind != FunctionalKind::L) throw DomainError("outer_L: inner functional is not of kind L");
    return outer(inner, params);
}

LogLinear outer_M(const InnerFunctional& inner, const SieveParams& params) {
    if (inner.kind != FunctionalKind::M) throw DomainError("outer_M: inner functional is not of kind M");
    return outer(inner, params);
}

double quad_outer(const InnerFunctional& inner, const SieveParams& params, double tol) {
    if (!(tol >= 1e-13)) throw DomainError("quad_outer: tol must be >= 1e-13");
    check_range(params);
    const long double c = params.sieve_exponent().to_long_double();
    const long double eta = params.eta.to_long_double();
    if (params.eta == params.sieve_exponent()) return 0.0;

    Dense G = to_dense(inner.G);
    std::vector<long double> g;
    for (const auto& x : G) g.push_back(x.to_long_double());
    const bool is_L = inner.kind == FunctionalKind::L;

    // xi = exp(s): d xi / xi = ds, which flattens the 1/xi behaviour near eta.
    auto integrand = [&](long double s) {
        const long double xi = std::exp(s);
        const long double a = xi / c;
        long double ga = 0.0L;
        for (std::size_t i = g.size(); i-- > 0;) ga = ga * a + g[i];
        const long double one_minus_a = 1.0L - a;
        const long double inner_value = is_L ? ga / one_minus_a : ga / (one_minus_a * one_minus_a);
        const long double gap = c - xi;
        const long double weight = (is_L ? gap : gap * gap) / (1.0L - xi);
        return weight * inner_value;
    };
    return static_cast<double>(integrate_adaptive(integrand, std::log(eta), std::log(c), tol).value);
}

LogLinear lemma41_constant(const BigRational& eta) {
    if (eta.sign() <= 0 || eta >= BigRational(1, 4)) throw DomainError("lemma41_constant: eta must lie in (0, 1/4)");
    return LogLinear::log_of((BigRational(1) - eta) / eta);
}

LeadingCoefficient leading_coefficient(const TestFunction& F, const SieveParams& params, Variant variant) {
    params.validate();
    if (params.k != F.k())
        throw DomainError("leading_coefficient: params.k=" + std::to_string(params.k) +
                          " but F has k=" + std::to_string(F.k()));
    LeadingCoefficient out;
    out.variant = variant;
    out.params = params;
    out.I = I_k(F).value;

    BigRational sum_J;
    LogLinear sum_L, sum_M;
    for (unsigned m = 1; m <= F.k(); ++m) {
        out.J.push_back(J_k_m(F, m).value);
        out.L.push_back(outer_L(inner_L(F, m, params), params));
        out.M.push_back(outer_M(inner_M(F, m, params), params));
        sum_J += out.J.back();
        sum_L += out.L.back();
        sum_M += out.M.back();
    }

    const BigRational tp = params.theta_prime();
    LogLinear c_eta = lemma41_constant(params.eta);
    if (variant == Variant::Sprime) c_eta += LogLinear(BigRational(1));

    out.breakdown.L_term = sum_L * (-tp);
    out.breakdown.J_term = c_eta * (tp * tp / BigRational(4) * sum_J);
    out.breakdown.M_term = sum_M;
    out.breakdown.rho_term = LogLinear(-BigRational(params.rho) * tp / BigRational(2) * out.I);
    out.value = out.breakdown.L_term + out.breakdown.J_term + out.breakdown.M_term + out.breakdown.rho_term;
    return out;
}

}  // namespace e2sieve
