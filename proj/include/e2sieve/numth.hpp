#pragma once

#include "e2sieve/bigrational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e2sieve {

using u64 = std::uint64_t;

/// Largest limit accepted by the streaming scans and by calls that return
/// whole lists, respectively.
inline constexpr u64 kScanBudget = 20'000'000'000ULL;
inline constexpr u64 kListBudget = 200'000'000ULL;

enum class Universe { Primes, E2, P2 };
std::string to_string(Universe u);
Universe parse_universe(const std::string& s);

u64 isqrt(u64 n);
/// floor(N^eta), exact.
u64 floor_power(u64 N, const BigRational& eta);
std::vector<u64> primes_up_to(u64 limit);

enum class NumberKind : std::uint8_t { Unit, Prime, E2, Other };

/// Factor-shape classification of every n in [lo, hi). For primes and E2
/// numbers, `smallest` holds the least prime factor.
struct RangeClassification {
    u64 lo = 0;
    std::vector<NumberKind> kind;
    std::vector<u64> smallest;
    [[nodiscard]] NumberKind at(u64 n) const { return kind[n - lo]; }
    [[nodiscard]] u64 smallest_at(u64 n) const { return smallest[n - lo]; }
};
/// Segmented trial-division sieve; `base_primes` must cover sqrt(hi - 1).
RangeClassification classify_range(u64 lo, u64 hi, const std::vector<u64>& base_primes);
RangeClassification classify_range(u64 lo, u64 hi);

bool in_universe(NumberKind kind, Universe u);

/// #{p prime : N <= p < 2N}, optionally restricted to p = a (mod q).
u64 pi_flat(u64 N);
u64 pi_flat_qa(u64 N, u64 q, u64 a);

/// 1 iff n = p1 p2 with floor(N^eta) < p1 <= sqrt(N) < p2.
int beta(u64 n, u64 N, const BigRational& eta);

/// Sums of beta(n) over N < n <= 2N: all n, n coprime to q, n = a (mod q).
u64 pi_beta(u64 N, const BigRational& eta);
u64 pi_beta_q(u64 N, const BigRational& eta, u64 q);
u64 pi_beta_qa(u64 N, const BigRational& eta, u64 q, u64 a);
/// pi_beta(N; q, a) - pi_beta_q(N) / phi(q); gcd(a, q) must be 1.
BigRational delta_beta(u64 N, const BigRational& eta, u64 q, u64 a);

u64 euler_phi(u64 n);
int mobius(u64 n);

std::vector<u64> e2_sequence(u64 limit);
std::vector<u64> p2_sequence(u64 limit);

class AdmissibleSet {
public:
    AdmissibleSet() = default;
    /// Sorts; rejects duplicates and an empty set.
    explicit AdmissibleSet(std::vector<u64> elements);
    [[nodiscard]] const std::vector<u64>& elements() const { return h_; }
    [[nodiscard]] std::size_t size() const { return h_.size(); }
    [[nodiscard]] u64 diameter() const { return h_.back() - h_.front(); }
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<u64> h_;
};

struct AdmissibilityCertificate {
    bool admissible = false;
    std::vector<std::pair<u64, u64>> missed_residue;  // (p, a_p) for every checked prime
    std::optional<u64> covering_prime;                // set when not admissible
};
AdmissibilityCertificate is_admissible(const std::vector<u64>& H);

/// The k primes after p_{pi(k)}, shifted to start at 0.
AdmissibleSet gen_admissible(unsigned k);

struct GapReport {
    Universe universe = Universe::E2;
    u64 limit = 0;
    unsigned rho = 1;
    std::optional<u64> min_gap;
    std::vector<u64> witness;           // rho + 1 consecutive elements
    std::map<u64, u64> histogram;        // gap -> count
    u64 scanned = 0;
};
GapReport gap_scan(u64 limit, unsigned rho, Universe universe);

struct TupleHits {
    u64 count = 0;
    std::vector<u64> witnesses;  // first 10
};
/// #{1 <= n <= limit : at least `threshold` of n + h_i lie in the universe}.
TupleHits tuple_hit_count(const AdmissibleSet& H, u64 limit, Universe universe, unsigned threshold);

struct BvRow {
    u64 q = 0;
    BigRational max_abs_delta;
    u64 argmax_a = 0;
};
struct BvTable {
    u64 N = 0;
    u64 q_max = 0;  // floor(N^theta)
    Universe universe = Universe::Primes;
    std::vector<BvRow> rows;  // squarefree q only
    BigRational weighted_sum;
};
/// universe Primes uses pi_flat counts on [N, 2N); E2 uses beta on (N, 2N].
BvTable bv_table(u64 N, const BigRational& eta, const BigRational& theta, Universe universe);

}  // namespace e2sieve
