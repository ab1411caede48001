#pragma once

#include "e2sieve/functionals.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace e2sieve {

/// A reference configuration: test function, parameters and the published
/// values it should reproduce (as printed, rounded decimals or exact
/// fractions).
struct BuiltinTheorem {
    std::string id;    // "1.2"
    std::string name;  // "thm1.2"
    unsigned k = 0;
    long rho = 0;
    BigRational theta;
    BigRational eta;
    Variant variant = Variant::S;
    std::string expression;  // power sums P1, P2, ... or coordinates u1..uk

    std::string reference_I, reference_J, reference_L, reference_M, reference_coefficient;

    [[nodiscard]] TestFunction test_function() const { return power_sum_build(k, expression); }
    [[nodiscard]] SieveParams params() const;
};

const std::vector<BuiltinTheorem>& builtin_theorems();
/// Accepts "1.2" or "thm1.2".
const BuiltinTheorem& builtin_theorem(std::string_view id);
bool is_builtin_name(std::string_view id);

/// Parses a printed reference value ("0.0287919", "5.30806e-6" or "a/b").
BigRational parse_reference(std::string_view printed);
/// `units` times one unit in the last printed digit; zero for fractions.
BigRational reference_tolerance(std::string_view printed, int units = 5);

}  // namespace e2sieve
