#include "e2sieve/bigfloat.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

namespace e2sieve {

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const BigRational& v, mpfr_prec_t bits, mpfr_rnd_t rnd) : BigFloat(bits) {
    mpfr_set_q(v_, v.raw().get_mpq_t(), rnd);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd) : BigFloat(bits) {
    mpfr_set_z(v_, v.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigRational BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw DomainError("BigFloat: non-finite value has no rational form");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return BigRational(q);
}

mpz_class BigFloat::floor() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string BigFloat::to_decimal(int digits) const {
    if (digits < 1) throw DomainError("to_decimal: digits must be >= 1");
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) throw DomainError("BigFloat: non-finite value");
    mpfr_exp_t e10 = 0;
    std::unique_ptr<char, void (*)(char*)> s(
        mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN),
        mpfr_free_str);
    std::string m(s.get());
    const bool neg = !m.empty() && m.front() == '-';
    if (neg) m.erase(0, 1);
    // mpfr returns 0.DDDD x 10^e10; our exponent is that of the first digit.
    return format_decimal(neg, m, static_cast<long>(e10) - 1);
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat r(std::max(a.precision(), b.precision()));
    op(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DomainError("BigFloat: division by zero");
    return binary(a, b, mpfr_div);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x, mpfr_rnd_t rnd) {
    if (x.sign() <= 0) throw DomainError("log of non-positive value");
    BigFloat r(x.precision());
    mpfr_log(r.get(), x.get(), rnd);
    return r;
}

BigFloat log1p(const BigFloat& x, mpfr_rnd_t rnd) {
    BigFloat r(x.precision());
    mpfr_log1p(r.get(), x.get(), rnd);
    return r;
}

BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd) {
    BigFloat r(x.precision());
    mpfr_exp(r.get(), x.get(), rnd);
    return r;
}

BigFloat expm1(const BigFloat& x, mpfr_rnd_t rnd) {
    BigFloat r(x.precision());
    mpfr_expm1(r.get(), x.get(), rnd);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log_rational(const BigRational& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
    if (q.sign() <= 0) throw DomainError("log of non-positive rational " + q.to_string());
    const mpfr_prec_t work = bits + 32;
    BigFloat r(bits);
    const BigRational shifted = q - BigRational(1);
    if (shifted.abs() < BigRational(1, 2)) {
        // Near 1: log1p is monotone, so rounding both steps the same way
        // keeps a directed result on the requested side.
        BigFloat x(shifted, work, rnd);
        mpfr_log1p(r.get(), x.get(), rnd);
        return r;
    }
    // ln(n/d) = ln n - ln d, the two parts rounded in opposite directions.
    const mpfr_rnd_t opposite = rnd == MPFR_RNDD ? MPFR_RNDU : (rnd == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDN);
    BigFloat n(q.num(), work, rnd);
    BigFloat d(q.den(), work, opposite);
    BigFloat ln(work), ld(work);
    mpfr_log(ln.get(), n.get(), rnd);
    mpfr_log(ld.get(), d.get(), opposite);
    mpfr_sub(r.get(), ln.get(), ld.get(), rnd);
    return r;
}

mpfr_prec_t bits_for_digits(int digits, int guard) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + guard;
}

}  // namespace e2sieve
