#include <doctest.h>

#include "e2sieve/builtins.hpp"
#include "e2sieve/error.hpp"
#include "e2sieve/simplex.hpp"

#include <cmath>
#include <functional>

using namespace e2sieve;

namespace {

// Iterated integration: u_k from 0 to 1 - (u_1 + ... + u_{k-1}), then u_{k-1}, ...
BigRational iterated_integral(SymPoly f) {
    while (f.arity() > 0) {
        const auto vars = f.variables();
        SymPoly upper = SymPoly::constant(vars, BigRational(1));
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) upper -= SymPoly::variable(vars, vars[i]);
        f = definite_integral_one_var(f, vars.back(), SymPoly::constant(vars, BigRational(0)), upper);
    }
    return f.is_zero() ? BigRational(0) : f.terms().begin()->second;
}

void for_each_exponent(unsigned k, unsigned max_degree, std::vector<unsigned>& e, unsigned i,
                       const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (i == k) {
        fn(e);
        return;
    }
    unsigned used = 0;
    for (unsigned j = 0; j < i; ++j) used += e[j];
    for (unsigned a = 0; a + used <= max_degree; ++a) {
        e[i] = a;
        for_each_exponent(k, max_degree, e, i + 1, fn);
    }
}

}  // namespace

TEST_CASE("monomial integrals match iterated integration for k <= 4, degree <= 6") {
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<unsigned> e(k, 0);
        const auto vars = SymPoly::standard_variables(k);
        for_each_exponent(k, 6, e, 0, [&](const std::vector<unsigned>& ex) {
            const SymPoly mono = SymPoly::monomial(vars, ex, BigRational(1));
            CHECK(monomial_simplex_integral(ex) == iterated_integral(mono));
        });
    }
}

TEST_CASE("simplex integral edge cases") {
    CHECK(monomial_simplex_integral(std::vector<unsigned>{}) == BigRational(1));
    CHECK(monomial_simplex_integral(std::vector<unsigned>{0, 0}) == BigRational(1, 2));
    CHECK(monomial_simplex_integral(std::vector<unsigned>{1}) == BigRational(1, 2));
}

TEST_CASE("I and J for simple functions") {
    const TestFunction one = power_sum_build(2, "1");
    CHECK(I_k(one).value == BigRational(1, 2));
    // marginal of 1 in u1 is 1 - u2; its square integrates to 1/3 on [0,1].
    CHECK(J_k_m(one, 1).value == BigRational(1, 3));
    CHECK(J_k_m(one, 2).value == BigRational(1, 3));
    const TestFunction k1 = power_sum_build(1, "1 - u1");
    CHECK(I_k(k1).value == BigRational(1, 3));
    CHECK(J_k_m(k1, 1).value == BigRational(1, 4));
    CHECK_THROWS_AS(J_k_m(one, 3), DomainError);
    CHECK_THROWS_AS(J_k_m(one, 0), DomainError);
}

TEST_CASE("five-variable reference rationals") {
    const TestFunction F = builtin_theorem("1.4").test_function();
    CHECK(I_k(F).value == BigRational(1735763, 1732500000));
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(J_k_m(F, m).value == BigRational(mpz_class(722755717), mpz_class("1871100000000", 10)));
}

TEST_CASE("J equals the square of the marginal integrated over the remaining simplex") {
    const TestFunction F = power_sum_build(3, "1 - 2*u1 + u2*u3 - P2");
    for (unsigned m = 1; m <= 3; ++m) {
        const SymPoly g = marginal(F, m);
        CHECK(g.arity() == 2);
        CHECK(J_k_m(F, m).value == iterated_integral(g * g));
    }
}

TEST_CASE("Monte-Carlo estimates cover the exact values") {
    for (const char* id : {"1.2", "1.3", "1.4"}) {
        const TestFunction F = builtin_theorem(id).test_function();
        const auto I = mc_simplex_integral(F, std::nullopt, 200'000, 11);
        CHECK(std::fabs(I.estimate - I_k(F).value.to_double()) <= 4 * I.stderr_);
        const auto J = mc_simplex_integral(F, 1u, 200'000, 12);
        CHECK(std::fabs(J.estimate - J_k_m(F, 1).value.to_double()) <= 4 * J.stderr_);
    }
}

TEST_CASE("Monte-Carlo is reproducible for a fixed seed") {
    const TestFunction F = power_sum_build(3, "1 - P1");
    const auto a = mc_simplex_integral(F, std::nullopt, 20'000, 5);
    const auto b = mc_simplex_integral(F, std::nullopt, 20'000, 5);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_ == b.stderr_);
    CHECK_THROWS_AS(mc_simplex_integral(F, std::nullopt, 10, 5), DomainError);
}
