#include "e2sieve/error.hpp"
#include "e2sieve/testfunction.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace e2sieve {

TestFunction::TestFunction(unsigned k, SymPoly poly) : k_(k), poly_(std::move(poly)) {
    if (k_ < 1) throw DomainError("TestFunction: k must be >= 1");
    if (poly_.variables() != SymPoly::standard_variables(k_))
        throw DomainError("TestFunction: polynomial must be over u1..u" + std::to_string(k_));
}

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
            // optional exponent, only when followed by a digit or sign+digit
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    i = j;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                }
            }
            out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Ident, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, c), i});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<std::string> vars, unsigned k)
        : toks_(std::move(tokens)), vars_(std::move(vars)), k_(k) {}

    SymPoly parse() {
        SymPoly p = expr();
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(const char* op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(peek().pos));
    }

    SymPoly expr() {
        SymPoly acc = term();
        for (;;) {
            if (accept("+")) acc += term();
            else if (accept("-")) acc -= term();
            else return acc;
        }
    }

    SymPoly term() {
        SymPoly acc = unary();
        for (;;) {
            if (accept("*")) {
                acc = acc * unary();
            } else if (accept("/")) {
                const SymPoly d = unary();
                if (d.is_zero()) fail("division by zero");
                if (d.total_degree() != 0) fail("division by a non-constant");
                acc *= d.terms().begin()->second.inverse();
            } else {
                return acc;
            }
        }
    }

    SymPoly unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    SymPoly power() {
        SymPoly base = primary();
        if (accept("^")) {
            if (peek().kind != Token::Number) fail("expected integer exponent");
            const BigRational e = BigRational::parse(peek().text);
            if (!e.is_integer() || e.sign() < 0 || e > BigRational(64)) fail("exponent must be an integer in [0, 64]");
            ++pos_;
            base = base.pow(static_cast<unsigned>(e.num().get_ui()));
        }
        return base;
    }

    SymPoly primary() {
        const Token t = peek();
        if (t.kind == Token::Number) {
            ++pos_;
            try {
                return SymPoly::constant(vars_, BigRational::parse(t.text));
            } catch (const ParseError& e) {
                fail(e.what());
            }
        }
        if (t.kind == Token::Ident) {
            ++pos_;
            return SymPoly::variable(vars_, canonical_name(t.text, t.pos));
        }
        if (accept("(")) {
            SymPoly inner = expr();
            if (!accept(")")) fail("expected ')'");
            return inner;
        }
        fail(t.kind == Token::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }

    std::string canonical_name(const std::string& id, std::size_t at) const {
        // Q<i> is accepted as an alias of P<i>.
        std::string name = id;
        if (!name.empty() && name[0] == 'Q') name[0] = 'P';
        for (const auto& v : vars_)
            if (v == name) return name;
        throw ParseError("unknown identifier '" + id + "' at position " + std::to_string(at) +
                         " (expected P<i>, Q<i> or u1..u" + std::to_string(k_) + ")");
    }

    std::vector<Token> toks_;
    std::vector<std::string> vars_;
    unsigned k_;
    std::size_t pos_ = 0;
};

// P1..Pd followed by u1..uk, where d is the largest power-sum index used.
std::vector<std::string> formal_variables(const std::vector<Token>& toks, unsigned k) {
    unsigned d = 0;
    for (const auto& t : toks) {
        if (t.kind != Token::Ident || t.text.size() < 2) continue;
        if (t.text[0] != 'P' && t.text[0] != 'Q') continue;
        const std::string digits = t.text.substr(1);
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) continue;
        const unsigned i = static_cast<unsigned>(std::stoul(digits));
        if (i == 0) throw ParseError("power sum index must be >= 1 at position " + std::to_string(t.pos));
        d = std::max(d, i);
    }
    std::vector<std::string> vars = SymPoly::standard_variables(d, "P");
    for (auto& u : SymPoly::standard_variables(k)) vars.push_back(u);
    return vars;
}

}  // namespace

SymPoly parse_formal_expression(std::string_view text, unsigned k) {
    if (k < 1) throw DomainError("parse_formal_expression: k must be >= 1");
    auto toks = tokenize(text);
    auto vars = formal_variables(toks, k);
    return Parser(std::move(toks), std::move(vars), k).parse();
}

TestFunction power_sum_build(unsigned k, const SymPoly& expression) {
    if (k < 1) throw DomainError("power_sum_build: k must be >= 1");
    const auto us = SymPoly::standard_variables(k);
    std::vector<std::string> vars = expression.variables();
    for (const auto& u : us)
        if (!expression.index_of(u)) vars.push_back(u);
    SymPoly p = expression.with_variables(vars);
    for (const auto& name : expression.variables()) {
        if (name.size() < 2 || name[0] != 'P') continue;
        const unsigned i = static_cast<unsigned>(std::stoul(name.substr(1)));
        SymPoly sum(vars);
        for (const auto& u : us) sum += SymPoly::variable(vars, u).pow(i);
        p = p.substitute(name, sum);
    }
    return TestFunction(k, p.with_variables(us));
}

TestFunction power_sum_build(unsigned k, std::string_view expression) {
    return power_sum_build(k, parse_formal_expression(expression, k));
}

}  // namespace e2sieve
