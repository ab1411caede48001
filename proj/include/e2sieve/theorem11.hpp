#pragma once

#include "e2sieve/bigfloat.hpp"
#include "e2sieve/bigrational.hpp"

#include <optional>
#include <vector>

namespace e2sieve {

struct Theorem11Options {
    mpfr_prec_t bits = 512;          // minimum working precision
    unsigned long k_budget_bits = 4096;  // larger k is handled through log k only
};

/// Parameter choice for the large-rho argument. When k fits the budget every
/// quantity is derived from the integer k; otherwise log k is carried in
/// place of k and T, eta are reported through their logarithms.
struct Theorem11Plan {
    mpz_class rho;
    BigRational theta;
    BigRational epsilon;

    BigFloat X;                   // (2+eps) rho / (3 theta log rho)
    bool k_materialized = false;
    std::optional<mpz_class> k;   // floor(exp(X) + 1)
    BigFloat log_k;
    double log2_k = 0.0;

    BigFloat A;                   // log k - 2 log log k
    BigFloat log_T;               // log T, T = (e^A - 1)/A
    BigFloat log_eta;             // log eta, eta = theta T / k
    std::optional<BigRational> T;    // exact dyadic image of T (materialized k)
    std::optional<BigRational> eta;  // theta T / k, exact

    bool identity_exact = false;  // 2 k eta / theta == 2 T checked on rationals
    bool vanishing_ok = false;    // 2 k eta / theta >= 2 T > T
    BigFloat rhs83;
    bool rhs83_exceeds_rho = false;
};

Theorem11Plan theorem11_plan(const mpz_class& rho, const BigRational& theta, const BigRational& epsilon,
                             const Theorem11Options& opts = {});

struct ThresholdScan {
    struct Row {
        unsigned exponent;
        bool exceeds;
        BigFloat ratio;  // rhs83 / rho
    };
    BigRational theta;
    BigRational epsilon;
    std::vector<Row> rows;  // rho = 10^exponent
    /// Smallest scanned exponent from which every scanned row exceeds.
    std::optional<unsigned> threshold_exponent;
    /// Smallest integer rho in (10^(t-1), 10^t] that exceeds, by bisection.
    std::optional<mpz_class> threshold_rho;
};

ThresholdScan theorem11_threshold_scan(const BigRational& theta, const BigRational& epsilon,
                                       unsigned exponent_min = 1, unsigned exponent_max = 200,
                                       const Theorem11Options& opts = {});

}  // namespace e2sieve
