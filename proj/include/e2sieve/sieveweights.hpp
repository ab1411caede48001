#pragma once

#include "e2sieve/ball.hpp"
#include "e2sieve/numth.hpp"
#include "e2sieve/testfunction.hpp"

#include <map>
#include <optional>
#include <vector>

namespace e2sieve {

using IndexTuple = std::vector<u64>;

struct SieveSetup {
    u64 N = 10'000;
    std::vector<u64> H{0, 2};
    BigRational theta{1};
    BigRational delta{0};
    BigRational eta{BigRational(1, 10)};
    std::optional<u64> D0;       // default max(2, floor(log log log N))
    std::optional<u64> W;        // default product of primes <= D0
    std::optional<u64> R;        // default floor(N^(theta/2 - delta))
    unsigned bits = 96;          // significant bits kept on lambda midpoints
    std::size_t max_support = 20'000;
    u64 max_N = 1'000'000;
};

/// Finite-N sieve data. All lambda values are computed once at construction
/// and then only read.
class SieveContext {
public:
    SieveContext(const SieveSetup& setup, TestFunction F);

    [[nodiscard]] u64 N() const { return N_; }
    [[nodiscard]] const AdmissibleSet& H() const { return H_; }
    [[nodiscard]] unsigned k() const { return static_cast<unsigned>(H_.size()); }
    [[nodiscard]] u64 R() const { return R_; }
    [[nodiscard]] u64 Y() const { return Y_; }
    [[nodiscard]] u64 W() const { return W_; }
    [[nodiscard]] u64 D0() const { return D0_; }
    [[nodiscard]] u64 nu0() const { return nu0_; }
    [[nodiscard]] const BigRational& eta() const { return eta_; }
    [[nodiscard]] const TestFunction& F() const { return F_; }
    [[nodiscard]] unsigned bits() const { return bits_; }

    /// Tuples with squarefree product <= R, every entry coprime to W.
    [[nodiscard]] const std::vector<IndexTuple>& support() const { return support_; }
    [[nodiscard]] bool supported(const IndexTuple& t) const { return index_.count(t) != 0; }
    [[nodiscard]] std::optional<std::size_t> index_of(const IndexTuple& t) const {
        const auto it = index_.find(t);
        return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }
    /// F(log r_1 / log R, ...) on a supported tuple.
    [[nodiscard]] const Ball& f_at(const IndexTuple& t) const;
    [[nodiscard]] const Ball& lambda_at(std::size_t support_index) const { return lambda_[support_index]; }

private:
    u64 N_, R_, Y_, W_, D0_, nu0_;
    AdmissibleSet H_;
    BigRational eta_;
    TestFunction F_;
    unsigned bits_;
    std::vector<IndexTuple> support_;
    std::map<IndexTuple, std::size_t> index_;
    std::vector<Ball> f_values_;
    std::vector<Ball> lambda_;
};

Ball lambda_weight(const SieveContext& ctx, const IndexTuple& t);

/// Maynard's inverse transform  prod mu(r_i) phi(r_i) * sum_{r | d} lambda_d / prod d_i,
/// which recovers F(log r / log R) exactly, or the literal variant with the
/// totally multiplicative g(p) = p - 2 and lambda_d / prod phi(d_i).
enum class YForm { Maynard, Literal };
Ball y_from_lambda(const SieveContext& ctx, const IndexTuple& r, YForm form = YForm::Maynard);

Ball weight_w(const SieveContext& ctx, u64 n);

struct SSums {
    Ball S0;
    std::vector<Ball> S1, S2;                    // per m
    std::vector<Ball> S2_I, S2_II, S2_III, S2_IV;  // per m
    Ball S, Sprime;
    u64 terms = 0;  // n values summed
};
SSums s_sums(const SieveContext& ctx, long rho);

}  // namespace e2sieve
