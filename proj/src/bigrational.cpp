#include "e2sieve/bigrational.hpp"

#include "e2sieve/error.hpp"

#include <cctype>
#include <deque>
#include <mutex>

namespace e2sieve {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DomainError("BigRational: zero denominator");
    q_.canonicalize();
}

BigRational::BigRational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    BigRational out;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto n = s.substr(0, slash);
        const auto d = s.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d))
            throw ParseError("bad rational literal '" + std::string(text) + "'");
        const mpz_class den(std::string(d), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        out = BigRational(mpz_class(std::string(n), 10), den);
    } else {
        long exp10 = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view es = s.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
                eneg = es.front() == '-';
                es.remove_prefix(1);
            }
            if (!all_digits(es) || es.size() > 6)
                throw ParseError("bad exponent in '" + std::string(text) + "'");
            exp10 = std::stol(std::string(es));
            if (eneg) exp10 = -exp10;
            s = s.substr(0, e);
        }
        std::string digits;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            const auto ip = s.substr(0, dot);
            const auto fp = s.substr(dot + 1);
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
                (ip.empty() && fp.empty()))
                throw ParseError("bad decimal literal '" + std::string(text) + "'");
            digits = std::string(ip) + std::string(fp);
            exp10 -= static_cast<long>(fp.size());
        } else {
            if (!all_digits(s)) throw ParseError("bad number literal '" + std::string(text) + "'");
            digits = std::string(s);
        }
        const mpz_class m(digits, 10);
        if (exp10 >= 0)
            out = BigRational(mpz_class(m * pow10(static_cast<unsigned long>(exp10))));
        else
            out = BigRational(m, pow10(static_cast<unsigned long>(-exp10)));
    }
    return negative ? -out : out;
}

long double BigRational::to_long_double() const {
    // mpq has no long double accessor; go through a decimal string at 30 digits.
    if (is_zero()) return 0.0L;
    return std::stold(to_decimal(30));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return BigRational(n, d);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DomainError("BigRational: inverse of zero");
    return BigRational(den(), num());
}

std::string format_decimal(bool negative, const std::string& mantissa, long exponent10) {
    std::string out = negative ? "-" : "";
    const long digits = static_cast<long>(mantissa.size());
    if (exponent10 >= -5 && exponent10 < 15) {
        if (exponent10 < 0) {
            out += "0.";
            out.append(static_cast<std::size_t>(-exponent10 - 1), '0');
            out += mantissa;
        } else if (exponent10 + 1 >= digits) {
            out += mantissa;
            out.append(static_cast<std::size_t>(exponent10 + 1 - digits), '0');
        } else {
            out += mantissa.substr(0, static_cast<std::size_t>(exponent10 + 1));
            out += '.';
            out += mantissa.substr(static_cast<std::size_t>(exponent10 + 1));
        }
        return out;
    }
    out += mantissa.substr(0, 1);
    if (digits > 1) {
        out += '.';
        out += mantissa.substr(1);
    }
    out += 'e';
    out += std::to_string(exponent10);
    return out;
}

std::string BigRational::to_decimal(int digits) const {
    if (digits < 1) throw DomainError("to_decimal: digits must be >= 1");
    if (is_zero()) return "0";
    const mpq_class a = ::abs(q_);

    // floor(log10 a) from digit counts, then corrected.
    long e = static_cast<long>(a.get_num().get_str().size()) -
             static_cast<long>(a.get_den().get_str().size());
    auto ten_pow = [](long k) {
        return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                      : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (a < ten_pow(e)) --e;
    while (a >= ten_pow(e + 1)) ++e;

    mpq_class scaled = a * ten_pow(digits - 1 - e);
    scaled.canonicalize();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const int c = cmp(mpz_class(2 * r), scaled.get_den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    if (q == pow10(static_cast<unsigned long>(digits))) {
        q /= 10;
        ++e;
    }
    return format_decimal(sign() < 0, q.get_str(), e);
}

const mpz_class& factorial(unsigned n) {
    static std::mutex mu;
    // deque: references stay valid while the cache grows.
    static std::deque<mpz_class> cache{mpz_class(1)};
    std::lock_guard lock(mu);
    while (cache.size() <= n) {
        const auto i = static_cast<unsigned long>(cache.size());
        cache.push_back(cache.back() * i);
    }
    return cache[n];
}

}  // namespace e2sieve
