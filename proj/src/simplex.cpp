#include "e2sieve/simplex.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace e2sieve {

BigRational monomial_simplex_integral(std::span<const unsigned> exponents) {
    unsigned total = 0;
    mpz_class num = 1;
    for (unsigned a : exponents) {
        total += a;
        num *= factorial(a);
    }
    return BigRational(num, factorial(total + static_cast<unsigned>(exponents.size())));
}

BigRational simplex_integral(const SymPoly& p) {
    BigRational sum;
    for (const auto& [e, c] : p.terms()) sum += c * monomial_simplex_integral(e);
    return sum;
}

SimplexIntegralResult I_k(const TestFunction& F) {
    return {simplex_integral(F.poly() * F.poly()), F.k(), IntegralKind::I, std::nullopt};
}

SymPoly marginal(const TestFunction& F, unsigned m) {
    if (m < 1 || m > F.k())
        throw DomainError("marginal: m=" + std::to_string(m) + " outside 1.." + std::to_string(F.k()));
    const auto& vars = F.poly().variables();
    const std::string var = vars[m - 1];
    SymPoly upper = SymPoly::constant(vars, BigRational(1));
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != m - 1) upper -= SymPoly::variable(vars, vars[i]);
    return definite_integral_one_var(F.poly(), var, SymPoly::constant(vars, BigRational(0)), upper);
}

SimplexIntegralResult J_k_m(const TestFunction& F, unsigned m) {
    if (m < 1 || m > F.k())
        throw DomainError("J_k_m: m=" + std::to_string(m) + " outside 1.." + std::to_string(F.k()));
    const SymPoly g = marginal(F, m);
    return {simplex_integral(g * g), F.k(), IntegralKind::J, m};
}

namespace {

// 53-bit uniform in [0, 1) straight from the engine output so the stream is
// identical across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform point of the d-simplex (first d spacings of d sorted uniforms).
void simplex_point(std::mt19937_64& rng, std::vector<double>& sorted, std::vector<long double>& out) {
    const std::size_t d = out.size();
    for (std::size_t i = 0; i < d; ++i) sorted[i] = uniform01(rng);
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(d));
    double prev = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = sorted[i] - prev;
        prev = sorted[i];
    }
}

}  // namespace

MonteCarloEstimate mc_simplex_integral(const TestFunction& F, std::optional<unsigned> m, std::uint64_t samples,
                                       std::uint64_t seed) {
    if (samples < 10000) throw DomainError("mc_simplex_integral: need at least 10^4 samples");
    const unsigned k = F.k();
    if (m && (*m < 1 || *m > k)) throw DomainError("mc_simplex_integral: m out of range");
    const NumericPoly f(F.poly());
    std::mt19937_64 rng(seed);

    const std::size_t dim = m ? k - 1 : k;
    const double volume = 1.0 / std::tgamma(static_cast<double>(dim) + 1.0);
    std::vector<double> sorted(std::max<std::size_t>(dim, 1));
    std::vector<long double> sub(dim), full(k);

    long double sum = 0.0L, sum_sq = 0.0L;
    for (std::uint64_t n = 0; n < samples; ++n) {
        simplex_point(rng, sorted, sub);
        long double x;
        if (!m) {
            const long double v = f(sub);
            x = v * v;
        } else {
            long double s = 0.0L;
            for (std::size_t i = 0, j = 0; i < k; ++i) {
                if (i == *m - 1) continue;
                full[i] = sub[j++];
                s += full[i];
            }
            const long double len = 1.0L - s;
            full[*m - 1] = len * uniform01(rng);
            const long double f1 = f(full);
            full[*m - 1] = len * uniform01(rng);
            const long double f2 = f(full);
            x = len * len * f1 * f2;
        }
        sum += x;
        sum_sq += x * x;
    }
    const long double nn = static_cast<long double>(samples);
    const long double mean = sum / nn;
    const long double var = std::max(0.0L, (sum_sq / nn - mean * mean) * nn / (nn - 1.0L));
    return {static_cast<double>(volume * mean), static_cast<double>(volume * std::sqrt(var / nn)), samples};
}

}  // namespace e2sieve
