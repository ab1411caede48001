#include "e2sieve/sieveweights.hpp"

#include "e2sieve/error.hpp"

#include <cmath>
#include <numeric>

namespace e2sieve {

namespace {

bool squarefree(u64 n) { return mobius(n) != 0; }

Ball eval_ball(const SymPoly& p, const std::vector<Ball>& point) {
    Ball acc;
    for (const auto& [e, c] : p.terms()) {
        Ball term = Ball::exact(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) term *= point[i];
        acc += term;
    }
    return acc;
}

bool divides_all(const IndexTuple& small, const IndexTuple& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (big[i] % small[i] != 0) return false;
    return true;
}

}  // namespace

SieveContext::SieveContext(const SieveSetup& s, TestFunction F)
    : H_(s.H), eta_(s.eta), F_(std::move(F)), bits_(s.bits) {
    N_ = s.N;
    if (N_ < 16) throw DomainError("SieveContext: N must be >= 16");
    if (N_ > s.max_N) throw BudgetExceeded("SieveContext: N exceeds cap " + std::to_string(s.max_N));
    if (F_.k() != H_.size())
        throw DomainError("SieveContext: F has k=" + std::to_string(F_.k()) + " but |H|=" + std::to_string(H_.size()));
    if (eta_.sign() <= 0 || eta_ >= BigRational(1, 4)) throw DomainError("SieveContext: eta must lie in (0, 1/4)");
    const BigRational c = s.theta / BigRational(2) - s.delta;
    if (c.sign() <= 0) throw DomainError("SieveContext: theta/2 - delta must be > 0");
    if (bits_ < 32) throw DomainError("SieveContext: bits must be >= 32");

    R_ = s.R ? *s.R : floor_power(N_, c);
    Y_ = floor_power(N_, eta_);
    if (R_ < 2) throw DomainError("SieveContext: R must be >= 2");
    if (static_cast<unsigned __int128>(R_) * R_ >= N_) throw DomainError("SieveContext: R must be below N^(1/2)");
    if (Y_ >= R_) throw DomainError("SieveContext: Y = floor(N^eta) must be below R");

    if (s.D0) {
        D0_ = *s.D0;
    } else {
        const double lll = std::log(std::log(std::log(static_cast<double>(N_))));
        D0_ = std::max<u64>(2, static_cast<u64>(std::floor(lll)));
    }
    if (s.W) {
        W_ = *s.W;
        if (W_ == 0 || !squarefree(W_)) throw DomainError("SieveContext: W must be squarefree and positive");
    } else {
        W_ = 1;
        for (u64 p : primes_up_to(std::max<u64>(2, D0_)))
            if (p <= D0_) W_ *= p;
    }
    bool found = false;
    for (u64 v = 0; v < W_ && !found; ++v) {
        bool ok = true;
        for (u64 h : H_.elements()) ok = ok && std::gcd(v + h, W_) == 1;
        if (ok) {
            nu0_ = v;
            found = true;
        }
    }
    if (!found) throw DomainError("SieveContext: no nu0 with gcd(nu0 + h_i, W) = 1");

    // Support enumeration.
    const unsigned k = this->k();
    IndexTuple cur(k, 1);
    auto rec = [&](auto&& self, unsigned i, u64 prod) -> void {
        if (i == k) {
            if (support_.size() >= s.max_support)
                throw BudgetExceeded("SieveContext: more than " + std::to_string(s.max_support) + " support tuples");
            index_.emplace(cur, support_.size());
            support_.push_back(cur);
            return;
        }
        for (u64 r = 1; prod * r <= R_; ++r) {
            if (std::gcd(r, W_) != 1 || std::gcd(r, prod) != 1 || !squarefree(r)) continue;
            cur[i] = r;
            self(self, i + 1, prod * r);
        }
        cur[i] = 1;
    };
    rec(rec, 0, 1);

    const mpz_class Rz(static_cast<unsigned long>(R_));
    std::map<u64, Ball> logs;
    auto log_of = [&](u64 r) -> const Ball& {
        auto it = logs.find(r);
        if (it == logs.end())
            it = logs.emplace(r, log_ratio_ball(mpz_class(static_cast<unsigned long>(r)), Rz, bits_ + 32)).first;
        return it->second;
    };
    std::vector<u64> phis(R_ + 1);
    for (u64 r = 1; r <= R_; ++r) phis[r] = euler_phi(r);

    f_values_.reserve(support_.size());
    std::vector<Ball> point(k);
    for (const auto& t : support_) {
        for (unsigned i = 0; i < k; ++i) point[i] = log_of(t[i]);
        f_values_.push_back(eval_ball(F_.poly(), point));
    }

    lambda_.reserve(support_.size());
    for (const auto& d : support_) {
        Ball sum;
        for (std::size_t j = 0; j < support_.size(); ++j) {
            const auto& r = support_[j];
            if (!divides_all(d, r)) continue;
            u64 den = 1;
            for (unsigned i = 0; i < k; ++i) den *= phis[r[i]];
            sum += f_values_[j].divided_by(BigRational(static_cast<long>(den)));
        }
        long sign = 1;
        u64 prod = 1;
        for (unsigned i = 0; i < k; ++i) {
            sign *= mobius(d[i]);
            prod *= d[i];
        }
        lambda_.push_back((sum * Ball::exact(BigRational(sign * static_cast<long>(prod)))).rounded(bits_));
    }
}

const Ball& SieveContext::f_at(const IndexTuple& t) const {
    const auto it = index_.find(t);
    if (it == index_.end()) throw DomainError("f_at: tuple outside the support");
    return f_values_[it->second];
}

Ball lambda_weight(const SieveContext& ctx, const IndexTuple& t) {
    if (t.size() != ctx.k()) throw DomainError("lambda_weight: tuple length differs from k");
    for (u64 d : t)
        if (d == 0) throw DomainError("lambda_weight: entries must be positive");
    // Tuples violating the support conditions are simply absent from the index.
    const auto i = ctx.index_of(t);
    return i ? ctx.lambda_at(*i) : Ball();
}

Ball y_from_lambda(const SieveContext& ctx, const IndexTuple& r, YForm form) {
    if (r.size() != ctx.k()) throw DomainError("y_from_lambda: tuple length differs from k");
    if (!ctx.supported(r)) return Ball();
    const unsigned k = ctx.k();
    Ball sum;
    const auto& sup = ctx.support();
    for (std::size_t j = 0; j < sup.size(); ++j) {
        const auto& d = sup[j];
        if (!divides_all(r, d)) continue;
        u64 den = 1;
        for (unsigned i = 0; i < k; ++i) den *= form == YForm::Maynard ? d[i] : euler_phi(d[i]);
        sum += ctx.lambda_at(j).divided_by(BigRational(static_cast<long>(den)));
    }
    BigRational factor(1);
    for (unsigned i = 0; i < k; ++i) {
        factor *= BigRational(mobius(r[i]));
        if (form == YForm::Maynard) {
            factor *= BigRational(static_cast<long>(euler_phi(r[i])));
        } else {
            u64 x = r[i];
            for (u64 p = 2; p * p <= x; ++p)
                if (x % p == 0) {
                    factor *= BigRational(static_cast<long>(p) - 2);
                    x /= p;
                }
            if (x > 1) factor *= BigRational(static_cast<long>(x) - 2);
        }
    }
    return sum * Ball::exact(factor);
}

namespace {

struct InnerSums {
    Ball total;
    std::vector<Ball> with_dm_one, with_dm_prime;
    std::vector<u64> dm_seen;  // the single d_m > 1 value seen per m, 0 if none
};

InnerSums inner_sums(const SieveContext& ctx, u64 n) {
    const unsigned k = ctx.k();
    InnerSums s;
    s.with_dm_one.assign(k, Ball());
    s.with_dm_prime.assign(k, Ball());
    s.dm_seen.assign(k, 0);
    const auto& H = ctx.H().elements();
    const auto& sup = ctx.support();
    for (std::size_t j = 0; j < sup.size(); ++j) {
        const auto& d = sup[j];
        bool ok = true;
        for (unsigned i = 0; i < k && ok; ++i) ok = (n + H[i]) % d[i] == 0;
        if (!ok) continue;
        const Ball& l = ctx.lambda_at(j);
        s.total += l;
        for (unsigned m = 0; m < k; ++m) {
            if (d[m] == 1) {
                s.with_dm_one[m] += l;
            } else {
                s.with_dm_prime[m] += l;
                if (s.dm_seen[m] != 0 && s.dm_seen[m] != d[m]) s.dm_seen[m] = ~u64{0};
                else s.dm_seen[m] = d[m];
            }
        }
    }
    return s;
}

}  // namespace

Ball weight_w(const SieveContext& ctx, u64 n) {
    if (n < 1) throw DomainError("weight_w: n must be >= 1");
    const Ball t = inner_sums(ctx, n).total;
    return t * t;
}

SSums s_sums(const SieveContext& ctx, long rho) {
    if (rho < 1) throw DomainError("s_sums: rho must be >= 1");
    const unsigned k = ctx.k();
    const auto& H = ctx.H().elements();
    const u64 N = ctx.N(), W = ctx.W();
    const u64 sqrtN = isqrt(N);
    SSums out;
    out.S1.assign(k, Ball());
    out.S2.assign(k, Ball());
    out.S2_I.assign(k, Ball());
    out.S2_II.assign(k, Ball());
    out.S2_III.assign(k, Ball());
    out.S2_IV.assign(k, Ball());

    const u64 hi = 2 * N + H.back();
    const auto rc = classify_range(N, hi);
    u64 first = N + ((ctx.nu0() + W - N % W) % W);
    for (u64 n = first; n < 2 * N; n += W) {
        const InnerSums s = inner_sums(ctx, n);
        const Ball w = s.total * s.total;
        out.S0 += w;
        ++out.terms;
        for (unsigned m = 0; m < k; ++m) {
            const u64 x = n + H[m];
            const NumberKind kind = rc.at(x);
            if (kind == NumberKind::Prime) out.S1[m] += w;
            if (kind != NumberKind::E2) continue;
            const u64 p1 = rc.smallest_at(x), p2 = x / p1;
            if (!(ctx.Y() < p1 && p1 <= sqrtN && p2 > sqrtN)) continue;
            out.S2[m] += w;
            if (s.dm_seen[m] != 0 && s.dm_seen[m] != p1)
                throw std::logic_error("s_sums: divisor d_m > 1 other than p1 in the beta support");
            const Ball& A1 = s.with_dm_one[m];
            const Ball& Ap = s.with_dm_prime[m];
            out.S2_I[m] += Ap * A1;
            out.S2_II[m] += A1 * Ap;
            out.S2_III[m] += A1 * A1;
            out.S2_IV[m] += Ap * Ap;
        }
    }
    const Ball rho_b = Ball::exact(BigRational(rho));
    Ball sum2, sum12;
    for (unsigned m = 0; m < k; ++m) {
        sum2 += out.S2[m];
        sum12 += out.S1[m] + out.S2[m];
    }
    out.S = sum2 - rho_b * out.S0;
    out.Sprime = sum12 - rho_b * out.S0;
    return out;
}

}  // namespace e2sieve
