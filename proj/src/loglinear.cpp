#include "e2sieve/loglinear.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>
#include <vector>

namespace e2sieve {

LogLinear LogLinear::log_of(const BigRational& argument, const BigRational& coefficient) {
    if (argument.sign() <= 0)
        throw DomainError("LogLinear: non-positive log argument " + argument.to_string());
    LogLinear v;
    v.add_term(argument, coefficient);
    return v;
}

void LogLinear::add_term(const BigRational& argument, const BigRational& coefficient) {
    if (coefficient.is_zero() || argument == BigRational(1)) return;
    auto [it, inserted] = terms_.try_emplace(argument, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LogLinear& LogLinear::operator+=(const LogLinear& o) {
    constant_ += o.constant_;
    for (const auto& [arg, coef] : o.terms_) add_term(arg, coef);
    return *this;
}

LogLinear& LogLinear::operator-=(const LogLinear& o) {
    constant_ -= o.constant_;
    for (const auto& [arg, coef] : o.terms_) add_term(arg, -coef);
    return *this;
}

LogLinear& LogLinear::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        constant_ = BigRational(0);
        terms_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& [arg, coef] : terms_) coef *= s;
    return *this;
}

namespace {

// Refines a multiset of integers > 1 into a pairwise-coprime basis such that
// every input is a product of powers of basis elements.
std::vector<mpz_class> coprime_basis(std::vector<mpz_class> work) {
    std::vector<mpz_class> basis;
    while (!work.empty()) {
        mpz_class x = work.back();
        work.pop_back();
        if (x == 1) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), basis[i].get_mpz_t());
            if (g == 1) continue;
            if (g == x && g == basis[i]) {
                split = true;  // duplicate
                break;
            }
            mpz_class b = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            work.push_back(g);
            work.push_back(mpz_class(x / g));
            work.push_back(mpz_class(b / g));
            split = true;
            break;
        }
        if (!split) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace

LogLinear LogLinear::canonical() const {
    std::vector<mpz_class> numbers;
    for (const auto& [arg, coef] : terms_) {
        numbers.push_back(arg.num());
        numbers.push_back(arg.den());
    }
    const auto basis = coprime_basis(numbers);

    LogLinear out(constant_);
    for (const auto& [arg, coef] : terms_) {
        for (int side = 0; side < 2; ++side) {
            mpz_class n = side == 0 ? arg.num() : arg.den();
            for (const auto& b : basis) {
                long v = 0;
                while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
                    n /= b;
                    ++v;
                }
                if (v != 0) out.add_term(BigRational(b), side == 0 ? coef * BigRational(v) : -coef * BigRational(v));
            }
            if (n != 1) throw std::logic_error("coprime basis does not cover a log argument");
        }
    }
    return out;
}

bool LogLinear::canonically_equal(const LogLinear& o) const {
    const LogLinear diff = (*this - o).canonical();
    return diff.constant_.is_zero() && diff.terms_.empty();
}

std::pair<BigFloat, BigFloat> LogLinear::enclose(mpfr_prec_t bits) const {
    BigFloat lo(constant_, bits, MPFR_RNDD);
    BigFloat hi(constant_, bits, MPFR_RNDU);
    for (const auto& [arg, coef] : terms_) {
        const BigFloat llo = log_rational(arg, bits, MPFR_RNDD);
        const BigFloat lhi = log_rational(arg, bits, MPFR_RNDU);
        const BigFloat clo(coef, bits, MPFR_RNDD);
        const BigFloat chi(coef, bits, MPFR_RNDU);
        // Interval product of [clo, chi] x [llo, lhi]: min/max over the corners.
        BigFloat corners_lo(bits), corners_hi(bits);
        bool first = true;
        for (const BigFloat* c : {&clo, &chi}) {
            for (const BigFloat* l : {&llo, &lhi}) {
                BigFloat d(bits), u(bits);
                mpfr_mul(d.get(), c->get(), l->get(), MPFR_RNDD);
                mpfr_mul(u.get(), c->get(), l->get(), MPFR_RNDU);
                if (first || d < corners_lo) corners_lo = d;
                if (first || u > corners_hi) corners_hi = u;
                first = false;
            }
        }
        mpfr_add(lo.get(), lo.get(), corners_lo.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), corners_hi.get(), MPFR_RNDU);
    }
    return {lo, hi};
}

int LogLinear::sign() const {
    if (terms_.empty()) return constant_.sign();
    const LogLinear c = canonical();
    if (c.terms_.empty()) return c.constant_.sign();
    for (mpfr_prec_t bits = 128; bits <= (1 << 16); bits *= 2) {
        const auto [lo, hi] = c.enclose(bits);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    throw ConvergenceError("LogLinear::sign: could not separate value from zero");
}

BigFloat LogLinear::evaluate(mpfr_prec_t bits) const {
    BigFloat acc(constant_, bits + 16);
    for (const auto& [arg, coef] : terms_)
        acc = acc + BigFloat(coef, bits + 16) * log_rational(arg, bits + 16);
    BigFloat out(bits);
    mpfr_set(out.get(), acc.get(), MPFR_RNDN);
    return out;
}

double LogLinear::to_double() const { return evaluate(128).to_double(); }

std::string LogLinear::to_decimal(int digits) const {
    if (digits < 15) throw DomainError("LogLinear::to_decimal: need at least 15 digits");
    if (terms_.empty()) return constant_.to_decimal(digits);
    const LogLinear c = canonical();
    if (c.terms_.empty()) return c.constant_.to_decimal(digits);
    // Ziv loop: widen until both ends of the enclosure round identically.
    for (mpfr_prec_t bits = bits_for_digits(digits, 64); bits <= (1 << 18); bits *= 2) {
        const auto [lo, hi] = c.enclose(bits);
        std::string a = lo.to_decimal(digits);
        if (a == hi.to_decimal(digits)) return a;
    }
    throw ConvergenceError("LogLinear::to_decimal: rounding did not stabilise");
}

std::string LogLinear::to_string() const {
    const bool lead_constant = !constant_.is_zero() || terms_.empty();
    std::string out = lead_constant ? constant_.to_string() : "";
    for (const auto& [arg, coef] : terms_) {
        if (out.empty())
            out += coef.sign() < 0 ? "-" : "";
        else
            out += coef.sign() < 0 ? " - " : " + ";
        if (coef.abs() != BigRational(1)) out += coef.abs().to_string() + "*";
        out += "ln(" + arg.to_string() + ")";
    }
    return out;
}

}  // namespace e2sieve
