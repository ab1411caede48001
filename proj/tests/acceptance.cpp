// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "e2sieve/builtins.hpp"
#include "e2sieve/cli.hpp"
#include "e2sieve/functionals.hpp"
#include "e2sieve/numth.hpp"
#include "e2sieve/sieveweights.hpp"
#include "e2sieve/simplex.hpp"
#include "e2sieve/theorem11.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace e2sieve;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

bool within(const LogLinear& v, std::string_view printed) {
    const LogLinear diff = v - LogLinear(parse_reference(printed));
    const LogLinear tol(reference_tolerance(printed));
    return (tol - diff).sign() >= 0 && (tol + diff).sign() >= 0;
}

bool within(const BigRational& v, std::string_view printed) { return within(LogLinear(v), printed); }

bool abs_within(const LogLinear& v, const BigRational& target, const BigRational& tol) {
    const LogLinear diff = v - LogLinear(target);
    return (LogLinear(tol) - diff).sign() >= 0 && (LogLinear(tol) + diff).sign() >= 0;
}

void criterion1(Outcome& o) {
    const BuiltinTheorem& b = builtin_theorem("1.4");
    const TestFunction F = b.test_function();
    const BigRational I = I_k(F).value;
    o.require(I == BigRational::parse("1735763/1732500000"), "I_5");
    for (unsigned m = 1; m <= 5; ++m)
        o.require(J_k_m(F, m).value == BigRational::parse("722755717/1871100000000"), "J_5^(" + std::to_string(m) + ")");
    o.note << " I5=" << I.to_string();
}

void criterion2(Outcome& o) {
    for (const char* id : {"1.3", "1.2", "1.4"}) {
        const BuiltinTheorem& b = builtin_theorem(id);
        const TestFunction F = b.test_function();
        const SieveParams p = b.params();
        const BigRational I = I_k(F).value, J = J_k_m(F, 1).value;
        const LogLinear L = outer_L(inner_L(F, 1, p), p), M = outer_M(inner_M(F, 1, p), p);
        const std::string tag = std::string(" k=") + std::to_string(b.k);
        o.require(within(I, b.reference_I), tag + " I");
        o.require(within(J, b.reference_J), tag + " J");
        o.require(within(L, b.reference_L), tag + " L");
        o.require(within(M, b.reference_M), tag + " M");
        o.note << tag << ": L=" << L.to_decimal(15) << " M=" << M.to_decimal(15);
    }
}

void criterion3(Outcome& o) {
    struct Tol {
        const char* id;
        const char* target;
        const char* tol;
    };
    for (const Tol t : {Tol{"1.3", "0.00204", "5e-5"}, Tol{"1.2", "8.02e-8", "5e-10"}, Tol{"1.4", "2.13079e-6", "5e-7"}}) {
        const BuiltinTheorem& b = builtin_theorem(t.id);
        const LeadingCoefficient lc = leading_coefficient(b.test_function(), b.params(), b.variant);
        o.require(lc.value.sign() > 0, std::string(t.id) + " positive");
        o.require(abs_within(lc.value, BigRational::parse(t.target), BigRational::parse(t.tol)),
                  std::string(t.id) + " vs printed value");
        o.note << " " << t.id << "=" << lc.value.to_decimal(15);

        if (std::string(t.id) == "1.4") {
            // same combination with every outer integral taken by quadrature
            const SieveParams p = b.params();
            const TestFunction F = b.test_function();
            const double tp = p.theta_prime().to_double();
            double sumL = 0, sumM = 0, sumJ = 0;
            for (unsigned m = 1; m <= b.k; ++m) {
                sumL += quad_outer(inner_L(F, m, p), p, 1e-13);
                sumM += quad_outer(inner_M(F, m, p), p, 1e-13);
                sumJ += lc.J[m - 1].to_double();
            }
            const double ceta = lemma41_constant(p.eta).to_double() + (b.variant == Variant::Sprime ? 1.0 : 0.0);
            const double quad = -tp * sumL + tp * tp / 4 * ceta * sumJ + sumM -
                                static_cast<double>(p.rho) * tp / 2 * lc.I.to_double();
            o.require(std::fabs(quad - lc.value.to_double()) <= 5e-11, "1.4 quadrature vs closed form");
        }
        std::ostringstream out, err;
        o.require(run_cli({"verify", "--theorem", t.id}, out, err) == 0, std::string("verify ") + t.id + " exit");
    }
}

void criterion4(Outcome& o) {
    double worst = 0;
    for (const char* id : {"1.2", "1.3", "1.4"}) {
        const BuiltinTheorem& b = builtin_theorem(id);
        const TestFunction F = b.test_function();
        const SieveParams p = b.params();
        for (unsigned m = 1; m <= b.k; ++m) {
            const InnerFunctional l = inner_L(F, m, p), mm = inner_M(F, m, p);
            worst = std::max(worst, std::fabs(quad_outer(l, p, 1e-13) - outer_L(l, p).to_double()));
            worst = std::max(worst, std::fabs(quad_outer(mm, p, 1e-13) - outer_M(mm, p).to_double()));
        }
    }
    o.require(worst <= 1e-12, "max |quad - closed| <= 1e-12");
    o.note << " max deviation " << worst;
}

// Iterated symbolic integration of a monomial over the simplex, innermost
// coordinate last.
BigRational iterated(const std::vector<unsigned>& e) {
    const std::size_t k = e.size();
    const auto vars = SymPoly::standard_variables(k);
    SymPoly f = SymPoly::monomial(vars, e, BigRational(1));
    for (std::size_t i = k; i-- > 0;) {
        const auto& cur = f.variables();
        SymPoly upper = SymPoly::constant(cur, BigRational(1));
        for (std::size_t j = 0; j < i; ++j) upper -= SymPoly::variable(cur, vars[j]);
        f = definite_integral_one_var(f, vars[i], SymPoly::constant(cur, BigRational(0)), upper);
    }
    return f.terms().empty() ? BigRational(0) : f.terms().begin()->second;
}

void criterion5(Outcome& o) {
    std::size_t checked = 0;
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<unsigned> e(k, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
            if (i == k) {
                ++checked;
                if (monomial_simplex_integral(e) != iterated(e)) o.require(false, "monomial integral");
                return;
            }
            for (unsigned d = 0; d <= left; ++d) {
                e[i] = d;
                rec(i + 1, left - d);
            }
            e[i] = 0;
        };
        rec(0, 6);
    }
    o.note << " " << checked << " monomials;";
    for (const char* id : {"1.2", "1.3", "1.4"}) {
        const BuiltinTheorem& b = builtin_theorem(id);
        const TestFunction F = b.test_function();
        const double I = I_k(F).value.to_double(), J = J_k_m(F, 1).value.to_double();
        const MonteCarloEstimate mi = mc_simplex_integral(F, std::nullopt, 1'000'000, 20261017);
        const MonteCarloEstimate mj = mc_simplex_integral(F, 1u, 1'000'000, 20261017);
        const double zi = (mi.estimate - I) / mi.stderr_, zj = (mj.estimate - J) / mj.stderr_;
        o.require(std::fabs(zi) <= 4, std::string(id) + " MC I");
        o.require(std::fabs(zj) <= 4, std::string(id) + " MC J");
        o.note << " k=" << b.k << " z_I=" << zi << " z_J=" << zj;
    }
}

void criterion6(Outcome& o) {
    SieveSetup s;
    s.N = 10'000;
    s.H = {0, 2};
    s.R = 50;
    const SieveContext ctx(s, power_sum_build(2, "1 - P1"));
    BigRational worst;
    for (const auto& r : ctx.support()) {
        const Ball diff = y_from_lambda(ctx, r) - ctx.f_at(r);
        o.require(diff.contains_zero(), "roundtrip within tracked radius");
        worst = std::max(worst, diff.mid().abs());
    }
    const long rho = 1;
    const SSums ss = s_sums(ctx, rho);
    Ball sum2;
    for (unsigned m = 0; m < ctx.k(); ++m) {
        o.require((ss.S2_I[m] + ss.S2_II[m] + ss.S2_III[m] + ss.S2_IV[m]).mid() == ss.S2[m].mid(), "S2 partition");
        sum2 += ss.S2[m];
    }
    o.require(ss.S.mid() == sum2.mid() - BigRational(rho) * ss.S0.mid(), "S identity");
    o.note << " support " << ctx.support().size() << ", max roundtrip deviation " << worst.to_double()
           << ", S=" << ss.S.mid().to_decimal(12);
}

void criterion7(Outcome& o) {
    const auto e2 = e2_sequence(1'000'000);
    o.require(e2.size() >= 4 && e2[0] == 6 && e2[1] == 10 && e2[2] == 14 && e2[3] == 15, "prefix");
    const auto primes = primes_up_to(500'000);
    std::vector<u64> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= 1'000'000; ++j)
            pairs.push_back(primes[i] * primes[j]);
    std::sort(pairs.begin(), pairs.end());
    o.require(pairs == e2, "prime-pair oracle");
    o.require(is_admissible({0, 2, 6}).admissible, "{0,2,6}");
    o.require(is_admissible({0, 2, 6, 8, 12}).admissible, "{0,2,6,8,12}");
    o.require(is_admissible({0, 4, 6, 10, 12, 16}).admissible, "{0,4,6,10,12,16}");
    o.require(!is_admissible({0, 2, 4}).admissible, "{0,2,4}");
    const GapReport g1 = gap_scan(10'000, 1, Universe::E2), g2 = gap_scan(10'000, 2, Universe::E2);
    o.require(g1.min_gap == 1u && g1.witness == std::vector<u64>{14, 15}, "gap rho=1");
    o.require(g2.min_gap == 2u && g2.witness == std::vector<u64>{33, 34, 35}, "gap rho=2");
    o.note << " " << e2.size() << " E2 numbers up to 1e6";
}

void criterion8(Outcome& o) {
    // rho <= 1000 and theta >= 1/20 keep k below the materialization budget
    std::mt19937_64 gen(8);
    int exact = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const mpz_class rho(static_cast<unsigned long>(10 + gen() % 990));
        const long den = 1 + static_cast<long>(gen() % 20);
        const BigRational theta(mpz_class(1 + static_cast<long>(gen() % den)), mpz_class(den));
        const BigRational eps(mpz_class(1 + static_cast<long>(gen() % 50)), mpz_class(50));
        const Theorem11Plan p = theorem11_plan(rho, theta, eps);
        if (p.k_materialized && p.identity_exact &&
            BigRational(2) * BigRational(*p.k) * *p.eta / theta == BigRational(2) * *p.T)
            ++exact;
    }
    o.require(exact == 50, "identity on 50 random plans");
    o.note << " identity " << exact << "/50;";

    for (const BigRational& theta : {BigRational(1, 2), BigRational(1)}) {
        const ThresholdScan s = theorem11_threshold_scan(theta, BigRational(1, 10), 1, 200);
        o.require(s.threshold_exponent.has_value(), "threshold found");
        if (!s.threshold_exponent) continue;
        for (const auto& r : s.rows)
            if (r.exponent >= *s.threshold_exponent) o.require(r.exceeds, "row above threshold");
        // random rho between the bisected threshold and 10^200
        const mpz_class lo = *s.threshold_rho;
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(static_cast<unsigned long>(*s.threshold_exponent));
        for (int i = 0; i < 20; ++i) {
            mpz_class span;
            mpz_ui_pow_ui(span.get_mpz_t(), 10, mpz_class(rng.get_z_range(200)).get_ui() + 1);
            const mpz_class rho = lo + rng.get_z_range(span);
            o.require(theorem11_plan(rho, theta, BigRational(1, 10)).rhs83_exceeds_rho, "random rho above threshold");
        }
        o.require(!theorem11_plan(lo - 1, theta, BigRational(1, 10)).rhs83_exceeds_rho, "threshold is sharp");
        o.note << " theta=" << theta.to_string() << ": threshold 10^" << *s.threshold_exponent
               << " (rho0=" << lo.get_str().substr(0, 6) << "...e" << lo.get_str().size() - 1 << ");";
    }

    for (const auto& b : builtin_theorems()) {
        const TestFunction F = b.test_function();
        SieveParams p = b.params();
        const LeadingCoefficient base = leading_coefficient(F, p, b.variant);
        p.rho += 1;
        const LeadingCoefficient up = leading_coefficient(F, p, b.variant);
        p.rho -= 1;
        o.require((up.value - base.value).canonically_equal(LogLinear(-p.theta_prime() / BigRational(2) * base.I)),
                  b.id + " rho step");
        const LeadingCoefficient s = leading_coefficient(F, p, Variant::S);
        const LeadingCoefficient sp = leading_coefficient(F, p, Variant::Sprime);
        BigRational sumJ;
        for (const auto& j : s.J) sumJ += j;
        o.require((sp.value - s.value).canonically_equal(LogLinear(p.theta_prime() * p.theta_prime() / BigRational(4) * sumJ)),
                  b.id + " variant difference");
    }
}

void criterion9(Outcome& o) {
    const std::vector<std::vector<std::string>> commands{
        {"verify", "--theorem", "1.2"},
        {"verify", "--theorem", "1.3", "--format", "csv"},
        {"verify", "--theorem", "1.4", "--format", "text"},
        {"functional", "--F", "thm1.3", "--quad"},
        {"scan", "--mode", "gaps", "--universe", "E2", "--rho", "2", "--limit", "100000"},
        {"scan", "--mode", "tuples", "--universe", "P2", "--H", "0,4,6,10,12,16", "--threshold", "3", "--limit", "10000"},
        {"scan", "--mode", "bv", "--universe", "primes", "--N", "10000", "--theta", "1/2"},
        {"theorem11", "--rho", "1000", "--theta", "1/2", "--epsilon", "1/10", "--scan"},
        {"sieve", "--N", "10000", "--H", "0,2", "--R", "50"},
        {"mc", "--theorem", "1.4", "--samples", "100000", "--seed", "5"},
        {"admissible", "--k", "50"},
        {"sequence", "--universe", "E2", "--limit", "10000", "--format", "csv"},
    };
    for (const auto& c : commands) {
        std::ostringstream a, b, ea, eb;
        const int ca = run_cli(c, a, ea), cb = run_cli(c, b, eb);
        o.require(ca == 0 && cb == 0, c[0] + " exit status");
        o.require(a.str() == b.str() && !a.str().empty(), c[0] + " byte-identical output");
    }
    o.note << " " << commands.size() << " commands run twice";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
        {"1 exact I_5 and J_5", criterion1},
        {"2 decimal I, J, L, M", criterion2},
        {"3 leading-coefficient verdicts", criterion3},
        {"4 closed form vs quadrature", criterion4},
        {"5 simplex oracle and Monte-Carlo", criterion5},
        {"6 sieve identities", criterion6},
        {"7 number theory", criterion7},
        {"8 large-rho plan and functional identities", criterion8},
        {"9 CLI determinism", criterion9},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << name << " (" << secs << " s):" << o.note.str()
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}
