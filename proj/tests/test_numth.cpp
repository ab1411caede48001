#include <doctest.h>

#include "e2sieve/error.hpp"
#include "e2sieve/numth.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace e2sieve;

namespace {

std::vector<char> plain_sieve(u64 n) {
    std::vector<char> p(n + 1, 1);
    p[0] = 0;
    if (n >= 1) p[1] = 0;
    for (u64 i = 2; i * i <= n; ++i)
        if (p[i])
            for (u64 j = i * i; j <= n; j += i) p[j] = 0;
    return p;
}

std::vector<u64> factor(u64 n) {
    std::vector<u64> f;
    for (u64 p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            f.push_back(p);
            n /= p;
        }
    if (n > 1) f.push_back(n);
    return f;
}

bool beta_oracle(u64 n, u64 N, u64 Y) {
    const auto f = factor(n);
    if (f.size() != 2 || f[0] == f[1]) return false;
    // p1 <= sqrt(N) < p2, both decided on integers
    return Y < f[0] && f[0] * f[0] <= N && f[1] * f[1] > N;
}

const BigRational tenth(1, 10);

}  // namespace

TEST_CASE("prime enumeration") {
    const auto sieve = plain_sieve(1'000'000);
    const auto primes = primes_up_to(1'000'000);
    CHECK(primes.size() == 78498);
    std::vector<u64> expect;
    for (u64 i = 0; i <= 1'000'000; ++i)
        if (sieve[i]) expect.push_back(i);
    CHECK(primes == expect);
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<u64>{2});
    CHECK_THROWS_AS(primes_up_to(kScanBudget + 1), BudgetExceeded);
}

TEST_CASE("integer helpers") {
    for (u64 n : {0ULL, 1ULL, 3ULL, 4ULL, 99ULL, 100ULL, 101ULL, 18446744073709551615ULL, 4294967296ULL}) {
        const u64 r = isqrt(n);
        CHECK(static_cast<unsigned __int128>(r) * r <= n);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
    }
    CHECK(floor_power(10000, tenth) == 2);
    CHECK(floor_power(1000, BigRational(1, 3)) == 10);
    CHECK(floor_power(999, BigRational(1, 3)) == 9);
    CHECK(floor_power(10000, BigRational(1, 2)) == 100);
    CHECK(floor_power(100, BigRational(3, 2)) == 1000);
    for (u64 n = 1; n <= 10000; ++n) {
        const auto f = factor(n);
        u64 phi = n;
        std::set<u64> ps(f.begin(), f.end());
        for (u64 p : ps) phi = phi / p * (p - 1);
        CHECK(euler_phi(n) == phi);
        const int mu = ps.size() != f.size() ? 0 : (f.size() % 2 ? -1 : 1);
        CHECK(mobius(n) == mu);
    }
}

TEST_CASE("range classification agrees with trial factorization") {
    for (u64 lo : {1ULL, 1'000'000ULL, 999'999'000'000ULL}) {
        const auto rc = classify_range(lo, lo + 3000);
        for (u64 n = lo; n < lo + 3000; ++n) {
            const auto f = factor(n);
            NumberKind k = NumberKind::Other;
            if (n == 1) k = NumberKind::Unit;
            else if (f.size() == 1) k = NumberKind::Prime;
            else if (f.size() == 2 && f[0] != f[1]) k = NumberKind::E2;
            CAPTURE(n);
            CHECK(rc.at(n) == k);
            if (k == NumberKind::Prime || k == NumberKind::E2) CHECK(rc.smallest_at(n) == f[0]);
        }
    }
}

TEST_CASE("prime counts on [N, 2N)") {
    const auto sieve = plain_sieve(400'000);
    for (u64 N : {2ULL, 3ULL, 10ULL, 100ULL, 997ULL, 200'000ULL}) {
        u64 c = 0;
        for (u64 n = N; n < 2 * N; ++n) c += sieve[n];
        CHECK(pi_flat(N) == c);
    }
    CHECK(pi_flat(100) == 21);
    CHECK(pi_flat(2) == 2);  // [2, 4) holds 2 and 3
    for (u64 q : {1ULL, 2ULL, 6ULL, 10ULL, 30ULL}) {
        u64 total = 0;
        for (u64 a = 0; a < q; ++a) total += pi_flat_qa(1000, q, a);
        CHECK(total == pi_flat(1000));
    }
    CHECK_THROWS_AS(pi_flat(1), DomainError);
}

TEST_CASE("beta indicator") {
    CHECK(beta(6, 100, tenth) == 0);
    CHECK(beta(202, 100, tenth) == 1);
    CHECK(beta(121 * 2, 100, tenth) == 0);  // 2 * 11^2
    CHECK(beta(11 * 13, 100, tenth) == 0);  // p1 > sqrt(N)
    CHECK(beta(10 * 10 + 1, 100, tenth) == 0);
    for (u64 N : {100ULL, 1000ULL, 5000ULL}) {
        const u64 Y = floor_power(N, tenth);
        for (u64 n = 1; n < 10000; ++n) CHECK(beta(n, N, tenth) == (beta_oracle(n, N, Y) ? 1 : 0));
    }
    const BigRational quarter_minus(6, 25);
    const u64 N = 3000, Y = floor_power(N, quarter_minus);
    for (u64 n = 1; n < 10000; ++n) CHECK(beta(n, N, quarter_minus) == (beta_oracle(n, N, Y) ? 1 : 0));
}

TEST_CASE("beta counts over (N, 2N]") {
    const auto sieve = plain_sieve(200'000);
    for (u64 N : {100ULL, 1000ULL, 100'000ULL}) {
        const u64 Y = floor_power(N, tenth), r = isqrt(N);
        // double count: outer loop over p1, inner count of primes p2 in range
        u64 expect = 0;
        for (u64 p1 = Y + 1; p1 <= r; ++p1) {
            if (!sieve[p1]) continue;
            for (u64 p2 = r + 1; p1 * p2 <= 2 * N; ++p2)
                if (sieve[p2] && p1 * p2 > N) ++expect;
        }
        CHECK(pi_beta(N, tenth) == expect);
        u64 direct = 0;
        if (N <= 1000)
            for (u64 n = N + 1; n <= 2 * N; ++n) direct += beta(n, N, tenth);
        if (N <= 1000) CHECK(direct == expect);
    }
    for (u64 q : {1ULL, 2ULL, 7ULL, 30ULL, 210ULL}) {
        BigRational sum;
        u64 in_classes = 0;
        for (u64 a = 0; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            sum += delta_beta(20000, tenth, q, a);
            in_classes += pi_beta_qa(20000, tenth, q, a);
        }
        CHECK(sum.is_zero());
        CHECK(in_classes == pi_beta_q(20000, tenth, q));
    }
    CHECK(delta_beta(20000, tenth, 1, 0).is_zero());
    CHECK(pi_beta_q(20000, tenth, 1) == pi_beta(20000, tenth));
    CHECK_THROWS_AS(delta_beta(20000, tenth, 6, 3), DomainError);
}

TEST_CASE("E2 and P2 sequences") {
    const auto e2 = e2_sequence(100);
    REQUIRE(e2.size() >= 6);
    CHECK(std::vector<u64>(e2.begin(), e2.begin() + 6) == std::vector<u64>{6, 10, 14, 15, 21, 22});
    CHECK(std::find(e2.begin(), e2.end(), 4) == e2.end());
    CHECK(std::find(e2.begin(), e2.end(), 12) == e2.end());
    CHECK(e2_sequence(15).back() == 15);

    const u64 L = 1'000'000;
    const auto primes = primes_up_to(L / 2);
    std::vector<u64> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= L; ++j)
            pairs.push_back(primes[i] * primes[j]);
    std::sort(pairs.begin(), pairs.end());
    CHECK(e2_sequence(L) == pairs);

    const auto p2 = p2_sequence(100000);
    const auto pr = primes_up_to(100000);
    const auto e = e2_sequence(100000);
    std::vector<u64> merged;
    std::merge(pr.begin(), pr.end(), e.begin(), e.end(), std::back_inserter(merged));
    CHECK(p2 == merged);
    CHECK(std::vector<u64>(p2.begin(), p2.begin() + 10) == std::vector<u64>{2, 3, 5, 6, 7, 10, 11, 13, 14, 15});
    CHECK_THROWS_AS(e2_sequence(5), DomainError);
    CHECK_THROWS_AS(e2_sequence(kListBudget + 1), BudgetExceeded);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible({0, 4, 6, 10, 12, 16}).admissible);
    CHECK(is_admissible({0, 2, 6}).admissible);
    CHECK(is_admissible({0, 2, 6, 8, 12}).admissible);
    const auto bad = is_admissible({0, 2, 4});
    CHECK_FALSE(bad.admissible);
    CHECK(bad.covering_prime == 3u);
    CHECK_THROWS_AS(is_admissible({}), DomainError);
    CHECK_THROWS_AS(is_admissible({1, 1}), DomainError);

    // random sets: certificates are re-checked here
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::set<u64> s;
        const std::size_t size = 1 + gen() % 12;
        while (s.size() < size) s.insert(gen() % 60);
        const std::vector<u64> H(s.begin(), s.end());
        const auto cert = is_admissible(H);
        bool covered = false;
        for (u64 p = 2; p <= H.size(); ++p) {
            if (factor(p).size() != 1) continue;
            std::set<u64> res;
            for (u64 h : H) res.insert(h % p);
            if (res.size() == p) covered = true;
        }
        CHECK(cert.admissible == !covered);
        if (cert.admissible) {
            for (const auto& [p, a] : cert.missed_residue)
                for (u64 h : H) CHECK(h % p != a);
        } else {
            std::set<u64> res;
            for (u64 h : H) res.insert(h % *cert.covering_prime);
            CHECK(res.size() == *cert.covering_prime);
        }
    }

    CHECK(gen_admissible(5).elements() == std::vector<u64>{0, 4, 6, 10, 12});
    CHECK(gen_admissible(1).elements() == std::vector<u64>{0});
    for (unsigned k = 1; k <= 200; ++k) {
        const AdmissibleSet H = gen_admissible(k);
        CHECK(H.size() == k);
        CHECK(is_admissible(H.elements()).admissible);
    }
    CHECK_THROWS_AS(gen_admissible(0), DomainError);
}

TEST_CASE("gap scans") {
    const GapReport a = gap_scan(100, 1, Universe::E2);
    CHECK(a.min_gap == 1u);
    CHECK(a.witness == std::vector<u64>{14, 15});
    const GapReport b = gap_scan(100, 2, Universe::E2);
    CHECK(b.min_gap == 2u);
    CHECK(b.witness == std::vector<u64>{33, 34, 35});
    const GapReport c = gap_scan(100, 1, Universe::Primes);
    CHECK(c.min_gap == 1u);
    CHECK(c.witness == std::vector<u64>{2, 3});
    CHECK(c.scanned == 24);  // 25 primes below 100
    u64 hist_total = 0;
    for (const auto& [g, n] : c.histogram) hist_total += n;
    CHECK(hist_total == c.scanned);
    CHECK(c.histogram.at(2) == 8);  // twin prime pairs below 100

    const GapReport d = gap_scan(10000, 2, Universe::P2);
    const auto p2 = p2_sequence(10000);
    u64 best = ~u64{0};
    for (std::size_t i = 2; i < p2.size(); ++i) best = std::min(best, p2[i] - p2[i - 2]);
    CHECK(d.min_gap == best);
    CHECK(d.scanned == p2.size() - 2);
    CHECK_THROWS_AS(gap_scan(99, 1, Universe::E2), DomainError);
    CHECK(parse_universe("beta") == Universe::E2);
    CHECK(parse_universe("P2") == Universe::P2);
    CHECK_THROWS(parse_universe("odd"));
}

TEST_CASE("tuple hits") {
    const TupleHits t = tuple_hit_count(AdmissibleSet({0, 2, 6}), 100, Universe::P2, 3);
    CHECK(std::find(t.witnesses.begin(), t.witnesses.end(), 5) != t.witnesses.end());
    const auto p2 = p2_sequence(200);
    const std::set<u64> in(p2.begin(), p2.end());
    u64 count = 0;
    for (u64 n = 1; n <= 100; ++n) count += in.count(n) && in.count(n + 2) && in.count(n + 6);
    CHECK(t.count == count);
    CHECK(t.witnesses.size() == std::min<u64>(10, count));
    CHECK(tuple_hit_count(AdmissibleSet({0, 4, 6, 10, 12, 16}), 10000, Universe::P2, 3).count > 0);
    CHECK(tuple_hit_count(AdmissibleSet({0, 2, 6}), 500, Universe::E2, 0).count == 500);
}

TEST_CASE("distribution tables") {
    const BvTable t = bv_table(100, tenth, BigRational(1, 2), Universe::Primes);
    CHECK(t.q_max == 10);
    REQUIRE(!t.rows.empty());
    CHECK(t.rows[0].q == 1);
    CHECK(t.rows[0].max_abs_delta.is_zero());
    // q = 2: every prime in [100, 200) is odd
    CHECK(t.rows[1].q == 2);
    CHECK(t.rows[1].max_abs_delta.is_zero());
    // q = 3: direct count
    u64 c1 = 0, c2 = 0;
    const auto sieve = plain_sieve(200);
    for (u64 n = 100; n < 200; ++n)
        if (sieve[n]) (n % 3 == 1 ? c1 : c2)++;
    const BigRational total(static_cast<long>(c1 + c2));
    const BigRational d1 = (BigRational(static_cast<long>(c1)) - total / BigRational(2)).abs();
    CHECK(t.rows[2].q == 3);
    CHECK(t.rows[2].max_abs_delta == d1);
    for (const auto& r : t.rows) CHECK(mobius(r.q) != 0);

    const BvTable b = bv_table(20000, tenth, BigRational(1, 2), Universe::E2);
    for (const auto& r : b.rows) {
        BigRational worst;
        for (u64 a = 0; a < r.q; ++a)
            if (std::gcd(a, r.q) == 1) worst = std::max(worst, delta_beta(20000, tenth, r.q, a).abs());
        CHECK(r.max_abs_delta == worst);
        if (r.q > 30) break;
    }
    CHECK_THROWS_AS(bv_table(100, tenth, BigRational(1, 2), Universe::P2), DomainError);
}
