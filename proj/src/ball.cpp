#include "e2sieve/ball.hpp"

#include "e2sieve/error.hpp"

namespace e2sieve {

Ball::Ball(BigRational mid, BigRational rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw DomainError("Ball: negative radius");
}

Ball Ball::rounded(unsigned bits) const {
    const BigRational m = BigFloat(mid_, static_cast<mpfr_prec_t>(bits), MPFR_RNDN).to_rational();
    return Ball(m, rad_ + (m - mid_).abs());
}

Ball& Ball::operator+=(const Ball& o) {
    mid_ += o.mid_;
    rad_ += o.rad_;
    return *this;
}

Ball& Ball::operator-=(const Ball& o) {
    mid_ -= o.mid_;
    rad_ += o.rad_;
    return *this;
}

Ball& Ball::operator*=(const Ball& o) {
    const BigRational r = mid_.abs() * o.rad_ + o.mid_.abs() * rad_ + rad_ * o.rad_;
    mid_ *= o.mid_;
    rad_ = r;
    return *this;
}

Ball Ball::divided_by(const BigRational& d) const {
    if (d.is_zero()) throw DomainError("Ball: division by zero");
    return Ball(mid_ / d, rad_ / d.abs());
}

std::string Ball::to_string(int digits) const {
    return mid_.to_decimal(digits) + " +/- " + (rad_.is_zero() ? std::string("0") : rad_.to_decimal(3));
}

Ball log_ratio_ball(const mpz_class& n, const mpz_class& R, unsigned bits) {
    if (n < 1 || R < 2) throw DomainError("log_ratio_ball: need n >= 1 and R >= 2");
    if (n == 1) return Ball(BigRational(0));
    if (n == R) return Ball(BigRational(1));
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(bits) + 16;
    BigFloat ln_lo(n, p, MPFR_RNDD), ln_hi(n, p, MPFR_RNDU);
    mpfr_log(ln_lo.get(), ln_lo.get(), MPFR_RNDD);
    mpfr_log(ln_hi.get(), ln_hi.get(), MPFR_RNDU);
    BigFloat lR_lo(R, p, MPFR_RNDD), lR_hi(R, p, MPFR_RNDU);
    mpfr_log(lR_lo.get(), lR_lo.get(), MPFR_RNDD);
    mpfr_log(lR_hi.get(), lR_hi.get(), MPFR_RNDU);
    BigFloat lo(p), hi(p);
    mpfr_div(lo.get(), ln_lo.get(), lR_hi.get(), MPFR_RNDD);
    mpfr_div(hi.get(), ln_hi.get(), lR_lo.get(), MPFR_RNDU);
    const BigRational a = lo.to_rational(), b = hi.to_rational();
    return Ball((a + b) / BigRational(2), (b - a) / BigRational(2)).rounded(bits);
}

}  // namespace e2sieve
