#include "e2sieve/sympoly.hpp"

#include "e2sieve/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace e2sieve {

SymPoly::SymPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw DomainError("SymPoly: duplicate variable " + vars_[i]);
}

SymPoly SymPoly::constant(std::vector<std::string> variables, const BigRational& c) {
    SymPoly p(std::move(variables));
    p.add_term(Exponents(p.arity(), 0), c);
    return p;
}

SymPoly SymPoly::variable(std::vector<std::string> variables, std::string_view name) {
    SymPoly p(std::move(variables));
    Exponents e(p.arity(), 0);
    e[p.require_index(name)] = 1;
    p.add_term(e, BigRational(1));
    return p;
}

SymPoly SymPoly::monomial(std::vector<std::string> variables, Exponents exponents, const BigRational& c) {
    SymPoly p(std::move(variables));
    if (exponents.size() != p.arity()) throw DomainError("SymPoly::monomial: arity mismatch");
    p.add_term(exponents, c);
    return p;
}

std::vector<std::string> SymPoly::standard_variables(std::size_t k, std::string_view prefix) {
    std::vector<std::string> v;
    v.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) v.push_back(std::string(prefix) + std::to_string(i));
    return v;
}

std::optional<std::size_t> SymPoly::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::size_t SymPoly::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw DomainError("SymPoly: unknown variable '" + std::string(name) + "'");
}

unsigned SymPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

unsigned SymPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

BigRational SymPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void SymPoly::add_term(const Exponents& e, const BigRational& c) {
    if (e.size() != vars_.size()) throw DomainError("SymPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SymPoly::require_same_variables(const SymPoly& o, const char* op) const {
    if (vars_ != o.vars_) throw DomainError(std::string("SymPoly ") + op + ": variable lists differ");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    require_same_variables(o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    require_same_variables(o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    a.require_same_variables(b, "*");
    SymPoly out(a.vars_);
    SymPoly::Exponents e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly result = constant(vars_, BigRational(1));
    SymPoly base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e != 0) base = base * base;
    }
    return result;
}

BigRational SymPoly::eval(std::span<const BigRational> point) const {
    if (point.size() != arity())
        throw DomainError("SymPoly::eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(arity()));
    BigRational sum;
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

namespace {

// Splits p by the exponent of variable j: result[d] holds the terms with
// x_j^d, with that exponent zeroed.
std::vector<SymPoly> split_by_degree(const SymPoly& p, std::size_t j) {
    std::vector<SymPoly> parts(p.degree_in(j) + 1, SymPoly(p.variables()));
    for (const auto& [e, c] : p.terms()) {
        SymPoly::Exponents rest = e;
        rest[j] = 0;
        parts[e[j]].add_term(rest, c);
    }
    return parts;
}

}  // namespace

SymPoly SymPoly::substitute(std::string_view name, const SymPoly& replacement) const {
    const std::size_t j = require_index(name);
    const SymPoly r = replacement.with_variables(vars_);
    const auto parts = split_by_degree(*this, j);
    SymPoly out(vars_);
    SymPoly power = constant(vars_, BigRational(1));
    for (std::size_t d = 0; d < parts.size(); ++d) {
        if (d > 0) power = power * r;
        if (!parts[d].is_zero()) out += parts[d] * power;
    }
    return out;
}

SymPoly SymPoly::with_variables(std::vector<std::string> variables) const {
    SymPoly out(std::move(variables));
    if (out.vars_ == vars_) {
        out.terms_ = terms_;
        return out;
    }
    std::vector<std::optional<std::size_t>> target(arity());
    for (std::size_t i = 0; i < arity(); ++i) target[i] = out.index_of(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents ne(out.arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!target[i]) throw DomainError("SymPoly::with_variables: variable '" + vars_[i] + "' is in use");
            ne[*target[i]] = e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

SymPoly SymPoly::without_variable(std::string_view name) const {
    const std::size_t j = require_index(name);
    if (degree_in(j) != 0) throw DomainError("SymPoly::without_variable: polynomial depends on " + std::string(name));
    std::vector<std::string> v = vars_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
    return with_variables(std::move(v));
}

SymPoly SymPoly::derivative(std::string_view name) const {
    const std::size_t j = require_index(name);
    SymPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[j] == 0) continue;
        Exponents ne = e;
        --ne[j];
        out.add_term(ne, c * BigRational(static_cast<long>(e[j])));
    }
    return out;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Graded order: lower total degree first, then u1 before u2 within a degree.
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); };
    std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        const unsigned da = degree(a->first), db = degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (mono.empty()) out += c.abs().to_string();
        else if (c.abs() == BigRational(1)) out += mono;
        else out += c.abs().to_string() + "*" + mono;
        first = false;
    }
    return out;
}

SymPoly definite_integral_one_var(const SymPoly& f, std::string_view var, const SymPoly& lower,
                                  const SymPoly& upper) {
    const std::size_t j = f.require_index(var);
    const SymPoly lo = lower.with_variables(f.variables());
    const SymPoly hi = upper.with_variables(f.variables());
    if (lo.degree_in(j) != 0 || hi.degree_in(j) != 0)
        throw DomainError("definite_integral_one_var: limits depend on the integration variable");

    const auto parts = split_by_degree(f, j);
    SymPoly acc(f.variables());
    SymPoly hi_pow = hi, lo_pow = lo;  // x^(d+1) evaluated at the limits
    for (std::size_t d = 0; d < parts.size(); ++d) {
        if (d > 0) {
            hi_pow = hi_pow * hi;
            lo_pow = lo_pow * lo;
        }
        if (parts[d].is_zero()) continue;
        acc += parts[d] * (hi_pow - lo_pow) * BigRational(1, static_cast<long>(d + 1));
    }
    return acc.without_variable(var);
}

NumericPoly::NumericPoly(const SymPoly& p) : arity_(p.arity()), max_degree_(0) {
    for (const auto& [e, c] : p.terms()) {
        terms_.push_back({c.to_long_double(), e});
        for (unsigned x : e) max_degree_ = std::max(max_degree_, x);
    }
}

long double NumericPoly::operator()(std::span<const long double> point) const {
    if (point.size() != arity_) throw DomainError("NumericPoly: arity mismatch");
    std::vector<long double> powers(arity_ * (max_degree_ + 1));
    for (std::size_t i = 0; i < arity_; ++i) {
        long double v = 1.0L;
        for (unsigned d = 0; d <= max_degree_; ++d) {
            powers[i * (max_degree_ + 1) + d] = v;
            v *= point[i];
        }
    }
    long double sum = 0.0L;
    for (const auto& t : terms_) {
        long double m = t.coef;
        for (std::size_t i = 0; i < arity_; ++i)
            if (t.exps[i] != 0) m *= powers[i * (max_degree_ + 1) + t.exps[i]];
        sum += m;
    }
    return sum;
}

}  // namespace e2sieve
