#include "e2sieve/numth.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace e2sieve {

namespace {

constexpr u64 kSegment = u64{1} << 20;

void check_budget(u64 limit, u64 budget, const char* who) {
    if (limit > budget)
        throw BudgetExceeded(std::string(who) + ": limit " + std::to_string(limit) + " exceeds budget " +
                             std::to_string(budget));
}

template <class Fn>
void for_each_classified(u64 lo, u64 hi, Fn&& fn) {
    if (hi <= lo) return;
    const auto base = primes_up_to(std::max<u64>(2, isqrt(hi - 1)));
    for (u64 s = lo; s < hi; s += kSegment) {
        const u64 e = std::min(hi, s + kSegment);
        const auto rc = classify_range(s, e, base);
        for (u64 n = s; n < e; ++n) fn(n, rc.kind[n - s], rc.smallest[n - s]);
    }
}

bool beta_from_shape(NumberKind kind, u64 n, u64 p1, u64 Y, u64 sqrtN) {
    if (kind != NumberKind::E2) return false;
    const u64 p2 = n / p1;
    return Y < p1 && p1 <= sqrtN && p2 > sqrtN;
}

}  // namespace

std::string to_string(Universe u) {
    switch (u) {
        case Universe::Primes: return "primes";
        case Universe::E2: return "E2";
        case Universe::P2: return "P2";
    }
    return "?";
}

Universe parse_universe(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "primes" || t == "p") return Universe::Primes;
    if (t == "e2" || t == "beta") return Universe::E2;
    if (t == "p2") return Universe::P2;
    throw ParseError("unknown universe '" + s + "' (expected primes, E2 or P2)");
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 floor_power(u64 N, const BigRational& eta) {
    if (eta.sign() < 0) throw DomainError("floor_power: negative exponent");
    if (N <= 1 || eta.is_zero()) return N <= 1 ? N : 1;
    const mpz_class a = eta.num(), b = eta.den();
    if (a > 4096 || !b.fits_ulong_p()) throw DomainError("floor_power: exponent " + eta.to_string() + " too large");
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), N, a.get_ui());
    mpz_root(z.get_mpz_t(), z.get_mpz_t(), b.get_ui());
    if (!z.fits_ulong_p()) throw DomainError("floor_power: result does not fit 64 bits");
    return z.get_ui();
}

std::vector<u64> primes_up_to(u64 limit) {
    check_budget(limit, kScanBudget, "primes_up_to");
    std::vector<u64> out;
    if (limit < 2) return out;
    const u64 root = isqrt(limit);
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }
    std::vector<char> seg;
    for (u64 lo = 2; lo <= limit; lo += kSegment) {
        const u64 hi = std::min(limit + 1, lo + kSegment);
        seg.assign(hi - lo, 1);
        for (u64 p : base) {
            if (p * p >= hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 j = start; j < hi; j += p) seg[j - lo] = 0;
        }
        for (u64 n = lo; n < hi; ++n)
            if (seg[n - lo]) out.push_back(n);
    }
    return out;
}

RangeClassification classify_range(u64 lo, u64 hi, const std::vector<u64>& base_primes) {
    if (hi < lo) throw DomainError("classify_range: hi < lo");
    const u64 len = hi - lo;
    RangeClassification rc;
    rc.lo = lo;
    rc.kind.assign(len, NumberKind::Other);
    rc.smallest.assign(len, 0);
    std::vector<u64> rem(len);
    std::vector<std::uint8_t> omega(len, 0);
    std::vector<char> square(len, 0);
    for (u64 i = 0; i < len; ++i) rem[i] = lo + i;
    for (u64 p : base_primes) {
        if (p * p >= hi) break;
        for (u64 n = (lo + p - 1) / p * p; n < hi; n += p) {
            if (n == 0) continue;
            const u64 i = n - lo;
            unsigned c = 0;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                ++c;
            }
            if (rc.smallest[i] == 0) rc.smallest[i] = p;
            omega[i] = static_cast<std::uint8_t>(std::min(255U, omega[i] + c));
            if (c > 1) square[i] = 1;
        }
    }
    for (u64 i = 0; i < len; ++i) {
        const u64 n = lo + i;
        if (n < 2) {
            rc.kind[i] = NumberKind::Unit;
            continue;
        }
        if (rem[i] > 1) {
            if (rc.smallest[i] == 0) rc.smallest[i] = rem[i];
            ++omega[i];
        }
        if (omega[i] == 1) rc.kind[i] = NumberKind::Prime;
        else if (omega[i] == 2 && !square[i]) rc.kind[i] = NumberKind::E2;
    }
    return rc;
}

RangeClassification classify_range(u64 lo, u64 hi) {
    return classify_range(lo, hi, primes_up_to(std::max<u64>(2, hi == 0 ? 2 : isqrt(hi - 1))));
}

bool in_universe(NumberKind kind, Universe u) {
    switch (u) {
        case Universe::Primes: return kind == NumberKind::Prime;
        case Universe::E2: return kind == NumberKind::E2;
        case Universe::P2: return kind == NumberKind::Prime || kind == NumberKind::E2;
    }
    return false;
}

u64 pi_flat(u64 N) { return pi_flat_qa(N, 1, 0); }

u64 pi_flat_qa(u64 N, u64 q, u64 a) {
    if (N < 2) throw DomainError("pi_flat: N must be >= 2");
    if (q == 0) throw DomainError("pi_flat: q must be >= 1");
    check_budget(2 * N, kScanBudget, "pi_flat");
    a %= q;
    u64 count = 0;
    for_each_classified(N, 2 * N, [&](u64 n, NumberKind k, u64) {
        if (k == NumberKind::Prime && n % q == a) ++count;
    });
    return count;
}

int beta(u64 n, u64 N, const BigRational& eta) {
    if (n < 2) return 0;
    u64 p1 = 0;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p1 = d;
            break;
        }
    }
    if (p1 == 0) return 0;  // prime
    const u64 p2 = n / p1;
    if (p2 == p1) return 0;
    for (u64 d = 2; d * d <= p2; ++d)
        if (p2 % d == 0) return 0;
    return beta_from_shape(NumberKind::E2, n, p1, floor_power(N, eta), isqrt(N)) ? 1 : 0;
}

namespace {

template <class Pred>
u64 count_beta(u64 N, const BigRational& eta, Pred&& keep) {
    if (N < 2) throw DomainError("pi_beta: N must be >= 2");
    check_budget(2 * N, kScanBudget, "pi_beta");
    const u64 Y = floor_power(N, eta), r = isqrt(N);
    u64 count = 0;
    for_each_classified(N + 1, 2 * N + 1, [&](u64 n, NumberKind k, u64 p1) {
        if (keep(n) && beta_from_shape(k, n, p1, Y, r)) ++count;
    });
    return count;
}

}  // namespace

u64 pi_beta(u64 N, const BigRational& eta) {
    return count_beta(N, eta, [](u64) { return true; });
}

u64 pi_beta_q(u64 N, const BigRational& eta, u64 q) {
    if (q == 0) throw DomainError("pi_beta_q: q must be >= 1");
    return count_beta(N, eta, [q](u64 n) { return std::gcd(n, q) == 1; });
}

u64 pi_beta_qa(u64 N, const BigRational& eta, u64 q, u64 a) {
    if (q == 0) throw DomainError("pi_beta_qa: q must be >= 1");
    a %= q;
    return count_beta(N, eta, [q, a](u64 n) { return n % q == a; });
}

BigRational delta_beta(u64 N, const BigRational& eta, u64 q, u64 a) {
    if (q == 0) throw DomainError("delta_beta: q must be >= 1");
    if (std::gcd(a % q, q) != 1) throw DomainError("delta_beta: gcd(a, q) must be 1");
    const BigRational in_class(static_cast<long>(pi_beta_qa(N, eta, q, a)));
    const BigRational coprime(static_cast<long>(pi_beta_q(N, eta, q)));
    return in_class - coprime / BigRational(static_cast<long>(euler_phi(q)));
}

u64 euler_phi(u64 n) {
    if (n == 0) throw DomainError("euler_phi: n must be >= 1");
    u64 r = n;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

int mobius(u64 n) {
    if (n == 0) throw DomainError("mobius: n must be >= 1");
    int s = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        s = -s;
    }
    if (n > 1) s = -s;
    return s;
}

std::vector<u64> e2_sequence(u64 limit) {
    if (limit < 6) throw DomainError("e2_sequence: limit must be >= 6");
    check_budget(limit, kListBudget, "e2_sequence");
    std::vector<u64> out;
    for_each_classified(2, limit + 1, [&](u64 n, NumberKind k, u64) {
        if (k == NumberKind::E2) out.push_back(n);
    });
    return out;
}

std::vector<u64> p2_sequence(u64 limit) {
    if (limit < 2) throw DomainError("p2_sequence: limit must be >= 2");
    check_budget(limit, kListBudget, "p2_sequence");
    std::vector<u64> out;
    for_each_classified(2, limit + 1, [&](u64 n, NumberKind k, u64) {
        if (in_universe(k, Universe::P2)) out.push_back(n);
    });
    return out;
}

AdmissibleSet::AdmissibleSet(std::vector<u64> elements) : h_(std::move(elements)) {
    if (h_.empty()) throw DomainError("AdmissibleSet: empty set");
    std::sort(h_.begin(), h_.end());
    if (std::adjacent_find(h_.begin(), h_.end()) != h_.end())
        throw DomainError("AdmissibleSet: duplicate elements");
}

std::string AdmissibleSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < h_.size(); ++i) s += (i ? "," : "") + std::to_string(h_[i]);
    return s + "}";
}

AdmissibilityCertificate is_admissible(const std::vector<u64>& H) {
    const AdmissibleSet set(H);  // validates
    AdmissibilityCertificate cert;
    for (u64 p : primes_up_to(std::max<u64>(2, set.size()))) {
        if (p > set.size()) break;
        std::vector<char> hit(p, 0);
        for (u64 h : set.elements()) hit[h % p] = 1;
        const auto miss = std::find(hit.begin(), hit.end(), 0);
        if (miss == hit.end()) {
            cert.covering_prime = p;
            return cert;
        }
        cert.missed_residue.emplace_back(p, static_cast<u64>(miss - hit.begin()));
    }
    cert.admissible = true;
    return cert;
}

AdmissibleSet gen_admissible(unsigned k) {
    if (k < 1) throw DomainError("gen_admissible: k must be >= 1");
    u64 bound = 64;
    for (;;) {
        const auto primes = primes_up_to(bound);
        const auto pik = static_cast<std::size_t>(
            std::upper_bound(primes.begin(), primes.end(), static_cast<u64>(k)) - primes.begin());
        if (primes.size() >= pik + k) {
            std::vector<u64> h;
            for (std::size_t i = pik; i < pik + k; ++i) h.push_back(primes[i] - primes[pik]);
            return AdmissibleSet(std::move(h));
        }
        bound *= 2;
    }
}

GapReport gap_scan(u64 limit, unsigned rho, Universe universe) {
    if (limit < 100) throw DomainError("gap_scan: limit must be >= 100");
    if (rho < 1) throw DomainError("gap_scan: rho must be >= 1");
    check_budget(limit, kScanBudget, "gap_scan");
    GapReport rep;
    rep.universe = universe;
    rep.limit = limit;
    rep.rho = rho;
    std::deque<u64> window;
    for_each_classified(2, limit + 1, [&](u64 n, NumberKind k, u64) {
        if (!in_universe(k, universe)) return;
        window.push_back(n);
        if (window.size() < rho + 1) return;
        const u64 gap = window.back() - window.front();
        ++rep.histogram[gap];
        ++rep.scanned;
        if (!rep.min_gap || gap < *rep.min_gap) {
            rep.min_gap = gap;
            rep.witness.assign(window.begin(), window.end());
        }
        window.pop_front();
    });
    return rep;
}

TupleHits tuple_hit_count(const AdmissibleSet& H, u64 limit, Universe universe, unsigned threshold) {
    if (threshold > H.size()) throw DomainError("tuple_hit_count: threshold exceeds |H|");
    const u64 span = H.elements().back();
    check_budget(limit + span, kScanBudget, "tuple_hit_count");
    TupleHits out;
    if (limit == 0) return out;
    const auto base = primes_up_to(std::max<u64>(2, isqrt(limit + span)));
    for (u64 s = 1; s <= limit; s += kSegment) {
        const u64 e = std::min(limit + 1, s + kSegment);
        const auto rc = classify_range(s, e + span, base);
        for (u64 n = s; n < e; ++n) {
            unsigned hits = 0;
            for (u64 h : H.elements()) hits += in_universe(rc.at(n + h), universe) ? 1 : 0;
            if (hits >= threshold) {
                ++out.count;
                if (out.witnesses.size() < 10) out.witnesses.push_back(n);
            }
        }
    }
    return out;
}

BvTable bv_table(u64 N, const BigRational& eta, const BigRational& theta, Universe universe) {
    if (N < 2) throw DomainError("bv_table: N must be >= 2");
    if (theta.sign() <= 0 || theta > BigRational(1)) throw DomainError("bv_table: theta must lie in (0, 1]");
    if (universe == Universe::P2) throw DomainError("bv_table: universe must be primes or beta");
    check_budget(N, 10'000'000, "bv_table");
    BvTable t;
    t.N = N;
    t.universe = universe;
    t.q_max = floor_power(N, theta);
    if (t.q_max > 100'000) throw BudgetExceeded("bv_table: N^theta exceeds 100000 moduli");

    std::vector<u64> items;
    if (universe == Universe::Primes) {
        for_each_classified(N, 2 * N, [&](u64 n, NumberKind k, u64) {
            if (k == NumberKind::Prime) items.push_back(n);
        });
    } else {
        const u64 Y = floor_power(N, eta), r = isqrt(N);
        for_each_classified(N + 1, 2 * N + 1, [&](u64 n, NumberKind k, u64 p1) {
            if (beta_from_shape(k, n, p1, Y, r)) items.push_back(n);
        });
    }
    if (static_cast<long double>(t.q_max) * static_cast<long double>(items.size() + t.q_max) > 4e9L)
        throw BudgetExceeded("bv_table: work estimate exceeds budget");

    std::vector<u64> cnt;
    for (u64 q = 1; q <= t.q_max; ++q) {
        if (mobius(q) == 0) continue;
        cnt.assign(q, 0);
        for (u64 n : items) ++cnt[n % q];
        const u64 phi = euler_phi(q);
        u64 base = 0;
        if (universe == Universe::Primes) {
            base = items.size();
        } else {
            for (u64 a = 0; a < q; ++a)
                if (std::gcd(a, q) == 1) base += cnt[a];
        }
        // |cnt[a] - base/phi| = |cnt[a] phi - base| / phi
        u64 best = 0, best_a = 0;
        bool first = true;
        for (u64 a = 0; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            const u64 x = cnt[a] * phi, d = x > base ? x - base : base - x;
            if (first || d > best) {
                best = d;
                best_a = a;
                first = false;
            }
        }
        BvRow row{q, BigRational(mpz_class(static_cast<unsigned long>(best)), mpz_class(static_cast<unsigned long>(phi))), best_a};
        t.weighted_sum += row.max_abs_delta;
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace e2sieve
