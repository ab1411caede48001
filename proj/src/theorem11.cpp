#include "e2sieve/theorem11.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>

namespace e2sieve {

namespace {

// X enclosure endpoints: lo uses an upward log rho, hi a downward one.
BigFloat compute_X(const mpz_class& rho, const BigRational& theta, const BigRational& epsilon,
                   mpfr_prec_t bits, mpfr_rnd_t dir) {
    const mpfr_rnd_t opp = dir == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
    BigFloat logr(bits);
    mpfr_set_z(logr.get(), rho.get_mpz_t(), opp);
    mpfr_log(logr.get(), logr.get(), opp);
    BigFloat den(theta * BigRational(3), bits, opp);
    mpfr_mul(den.get(), den.get(), logr.get(), opp);
    BigFloat num(BigRational(rho) * (BigRational(2) + epsilon), bits, dir);
    BigFloat x(bits);
    mpfr_div(x.get(), num.get(), den.get(), dir);
    return x;
}

std::optional<mpz_class> materialize_k(const mpz_class& rho, const BigRational& theta,
                                       const BigRational& epsilon, mpfr_prec_t bits,
                                       unsigned long budget) {
    for (int attempt = 0; attempt < 6; ++attempt, bits *= 2) {
        BigFloat lo = compute_X(rho, theta, epsilon, bits, MPFR_RNDD);
        BigFloat hi = compute_X(rho, theta, epsilon, bits, MPFR_RNDU);
        if (hi.to_double() / 0.6931471805599453 > static_cast<double>(budget)) return std::nullopt;
        const mpfr_prec_t need = bits + static_cast<mpfr_prec_t>(hi.to_double() / 0.69) + 64;
        BigFloat elo(need), ehi(need);
        mpfr_exp(elo.get(), lo.get(), MPFR_RNDD);
        mpfr_exp(ehi.get(), hi.get(), MPFR_RNDU);
        mpz_class klo = elo.floor() + 1, khi = ehi.floor() + 1;
        if (klo == khi) return klo;
    }
    throw ConvergenceError("theorem11_plan: cannot decide floor(exp(X) + 1)");
}

BigFloat rhs83_value(const BigFloat& log_k, const BigRational& theta, const BigRational& epsilon,
                     mpfr_prec_t bits) {
    const BigFloat ll = log(log_k);
    const BigFloat three(3L, bits);
    const BigFloat factor(theta * BigRational(3, 2) * (BigRational(1) - epsilon / BigRational(4)), bits);
    return factor * (log_k * ll - three * ll * ll);
}

}  // namespace

Theorem11Plan theorem11_plan(const mpz_class& rho, const BigRational& theta, const BigRational& epsilon,
                             const Theorem11Options& opts) {
    if (rho < 3) throw DomainError("theorem11_plan: rho must be >= 3");
    if (theta.sign() <= 0 || theta > BigRational(1)) throw DomainError("theorem11_plan: theta must lie in (0, 1]");
    if (epsilon.sign() <= 0) throw DomainError("theorem11_plan: epsilon must be > 0");

    const mpfr_prec_t bits =
        std::max<mpfr_prec_t>(opts.bits, static_cast<mpfr_prec_t>(mpz_sizeinbase(rho.get_mpz_t(), 2)) + 192);

    Theorem11Plan p;
    p.rho = rho;
    p.theta = theta;
    p.epsilon = epsilon;
    p.X = compute_X(rho, theta, epsilon, bits, MPFR_RNDN);
    p.k = materialize_k(rho, theta, epsilon, bits, opts.k_budget_bits);
    p.k_materialized = p.k.has_value();

    const BigFloat one(1L, bits);
    if (p.k_materialized) {
        const mpfr_prec_t kbits = bits + static_cast<mpfr_prec_t>(mpz_sizeinbase(p.k->get_mpz_t(), 2));
        p.log_k = log(BigFloat(*p.k, kbits));
    } else {
        // log floor(e^X + 1) and X differ by less than e^-X, far below the
        // working precision once k exceeds the budget.
        p.log_k = p.X;
    }
    p.log2_k = p.log_k.to_double() / 0.6931471805599453;
    if (!(p.log_k > one)) throw DomainError("theorem11_plan: log log k must be > 0 (rho too small)");

    const BigFloat ll = log(p.log_k);
    p.A = p.log_k - BigFloat(2L, bits) * ll;
    if (p.A.sign() <= 0) throw DomainError("theorem11_plan: A = log k - 2 log log k must be > 0");

    // log T = A + log(1 - e^-A) - log A
    p.log_T = p.A + log1p(-exp(-p.A)) - log(p.A);
    const BigFloat log_theta = log_rational(theta, bits);
    p.log_eta = log_theta + p.log_T - p.log_k;

    if (p.k_materialized) {
        const BigFloat T = expm1(p.A) / p.A;
        p.T = T.to_rational();
        p.eta = theta * *p.T / BigRational(*p.k);
        const BigRational lhs = BigRational(2) * BigRational(*p.k) * *p.eta / theta;
        const BigRational rhs = BigRational(2) * *p.T;
        p.identity_exact = lhs == rhs;
        p.vanishing_ok = lhs >= rhs && rhs > *p.T;
    } else {
        // eta is defined as theta T / k, so 2 k eta / theta = 2 T by construction.
        p.identity_exact = false;
        p.vanishing_ok = p.A.sign() > 0;  // T > 0, hence 2T > T
    }

    p.rhs83 = rhs83_value(p.log_k, theta, epsilon, bits);
    p.rhs83_exceeds_rho = p.rhs83 > BigFloat(rho, bits);
    return p;
}

ThresholdScan theorem11_threshold_scan(const BigRational& theta, const BigRational& epsilon,
                                       unsigned exponent_min, unsigned exponent_max,
                                       const Theorem11Options& opts) {
    if (exponent_min < 1 || exponent_min > exponent_max) throw DomainError("threshold scan: bad exponent range");
    ThresholdScan out;
    out.theta = theta;
    out.epsilon = epsilon;
    mpz_class rho;
    for (unsigned j = exponent_min; j <= exponent_max; ++j) {
        mpz_ui_pow_ui(rho.get_mpz_t(), 10, j);
        if (rho < 3) continue;
        const Theorem11Plan p = theorem11_plan(rho, theta, epsilon, opts);
        out.rows.push_back({j, p.rhs83_exceeds_rho, p.rhs83 / BigFloat(rho, p.rhs83.precision())});
    }
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        if (!out.rows[i].exceeds) break;
        out.threshold_exponent = out.rows[i].exponent;
    }
    if (out.threshold_exponent && *out.threshold_exponent > exponent_min) {
        mpz_class lo, hi;  // lo fails, hi exceeds
        mpz_ui_pow_ui(lo.get_mpz_t(), 10, *out.threshold_exponent - 1);
        mpz_ui_pow_ui(hi.get_mpz_t(), 10, *out.threshold_exponent);
        while (hi - lo > 1) {
            const mpz_class mid = (lo + hi) / 2;
            if (theorem11_plan(mid, theta, epsilon, opts).rhs83_exceeds_rho)
                hi = mid;
            else
                lo = mid;
        }
        out.threshold_rho = hi;
    }
    return out;
}

}  // namespace e2sieve
