#include "e2sieve/builtins.hpp"

#include "e2sieve/error.hpp"

namespace e2sieve {

SieveParams BuiltinTheorem::params() const {
    SieveParams p;
    p.k = k;
    p.rho = rho;
    p.theta = theta;
    p.delta = BigRational(0);
    p.eta = eta;
    return p;
}

const std::vector<BuiltinTheorem>& builtin_theorems() {
    static const std::vector<BuiltinTheorem> table = [] {
        const BigRational eta = BigRational::parse("1e-10");
        std::vector<BuiltinTheorem> t;
        t.push_back({"1.2", "thm1.2", 6, 2, BigRational(1, 2), eta, Variant::Sprime,
                     "1 - 143577/50000*P1 + 12337/5000*P1^2 + 86987/50000*P2 - 619873/1000000*P1^3"
                     " - 156481/100000*P1*P2 - 230073/5000000*P3",
                     "5.30806e-6", "1.88915e-6", "9.20744e-6", "2.22265e-6", "8.02e-8"});
        t.push_back({"1.3", "thm1.3", 3, 2, BigRational(1), eta, Variant::Sprime, "(1-u1)*(1-u2)*(1-u3)",
                     "0.0287919", "0.0154828", "0.1606331", "0.0779163", "0.00204"});
        t.push_back({"1.4", "thm1.4", 5, 2, BigRational(1), eta, Variant::S,
                     "1 + 917/500*P1 - 281/50*P1^2 - 41/25*P2 + 287/100*P1^3 + 191/100*P1*P2 - 81/250*P3",
                     "1735763/1732500000", "722755717/1871100000000", "0.00392368", "0.00190092", "2.13079e-6"});
        return t;
    }();
    return table;
}

bool is_builtin_name(std::string_view id) {
    for (const auto& b : builtin_theorems())
        if (id == b.id || id == b.name) return true;
    return false;
}

const BuiltinTheorem& builtin_theorem(std::string_view id) {
    for (const auto& b : builtin_theorems())
        if (id == b.id || id == b.name) return b;
    throw DomainError("unknown theorem '" + std::string(id) + "' (expected 1.2, 1.3 or 1.4)");
}

BigRational parse_reference(std::string_view printed) { return BigRational::parse(printed); }

BigRational reference_tolerance(std::string_view printed, int units) {
    if (printed.find('/') != std::string_view::npos) return BigRational(0);
    long exponent = 0;
    std::string_view mant = printed;
    if (const auto e = printed.find_first_of("eE"); e != std::string_view::npos) {
        exponent = std::stol(std::string(printed.substr(e + 1)));
        mant = printed.substr(0, e);
    }
    long decimals = 0;
    if (const auto dot = mant.find('.'); dot != std::string_view::npos)
        decimals = static_cast<long>(mant.size() - dot - 1);
    const long power = exponent - decimals;  // unit = 10^power
    BigRational unit = BigRational(10).pow(static_cast<unsigned>(power < 0 ? -power : power));
    if (power < 0) unit = unit.inverse();
    return unit * BigRational(units);
}

}  // namespace e2sieve
