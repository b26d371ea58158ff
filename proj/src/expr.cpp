#include "novikov/expr.hpp"

#include "novikov/derivation.hpp"
#include "novikov/novikov.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace novikov {

Expr Expr::symbol(Kind kind, std::int64_t index) {
    Expr e;
    e.op = Op::Symbol;
    e.kind = kind;
    e.index = index;
    return e;
}

Expr Expr::literal(Rational value) {
    Expr e;
    e.op = Op::Literal;
    e.value = std::move(value);
    return e;
}

Expr Expr::node(Op op, std::vector<Expr> args) {
    Expr e;
    e.op = op;
    e.args = std::move(args);
    return e;
}

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                         join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

IndexOverflowError::IndexOverflowError(std::size_t offset, std::int64_t limit)
    : std::runtime_error("index at offset " + std::to_string(offset) + " exceeds the limit " +
                         std::to_string(limit)),
      offset_(offset) {}

namespace {

enum class Tok { End, Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, LBrack, RBrack, Comma, Semi };

struct Token {
    Tok type = Tok::End;
    std::string text;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (true) {
            while (i < input_.size() && std::isspace(static_cast<unsigned char>(input_[i]))) ++i;
            if (i == input_.size()) {
                out.push_back({Tok::End, "end of input", i});
                return out;
            }
            const char c = input_[i];
            const std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i]))) ++i;
                out.push_back({Tok::Number, std::string(input_.substr(start, i - start)), start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (i < input_.size() && (std::isalnum(static_cast<unsigned char>(input_[i])) ||
                                             input_[i] == '_')) {
                    ++i;
                }
                out.push_back({Tok::Ident, std::string(input_.substr(start, i - start)), start});
                continue;
            }
            Tok t = Tok::End;
            switch (c) {
                case '+': t = Tok::Plus; break;
                case '-': t = Tok::Minus; break;
                case '*': t = Tok::Star; break;
                case '/': t = Tok::Slash; break;
                case '(': t = Tok::LParen; break;
                case ')': t = Tok::RParen; break;
                case '[': t = Tok::LBrack; break;
                case ']': t = Tok::RBrack; break;
                case ',': t = Tok::Comma; break;
                case ';': t = Tok::Semi; break;
                default:
                    throw ParseError(start, {"expression"}, std::string("'") + c + "'");
            }
            out.push_back({t, std::string(1, c), start});
            ++i;
        }
    }

private:
    std::string_view input_;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::int64_t limit) : toks_(std::move(tokens)), limit_(limit) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().type != Tok::End) fail({"'+'", "'-'", "'*'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }
    bool is_novikov_op() const { return peek().type == Tok::Ident && peek().text == "o"; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        throw ParseError(t.offset, std::move(expected),
                         t.type == Tok::End ? t.text : "'" + t.text + "'");
    }

    void expect(Tok t, const char* what) {
        if (!accept(t)) fail({what});
    }

    Expr expr() {
        Expr lhs = term();
        while (true) {
            if (accept(Tok::Plus)) {
                lhs = Expr::node(Expr::Op::Sum, {std::move(lhs), term()});
            } else if (accept(Tok::Minus)) {
                lhs = Expr::node(Expr::Op::Difference, {std::move(lhs), term()});
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (accept(Tok::Star)) lhs = Expr::node(Expr::Op::Product, {std::move(lhs), factor()});
        return lhs;
    }

    Expr factor() {
        if (accept(Tok::Minus)) return Expr::node(Expr::Op::Negate, {factor()});
        Expr lhs = primary();
        if (!is_novikov_op()) return lhs;
        ++pos_;
        Expr rhs = primary();
        if (is_novikov_op()) fail({"'*'", "'+'", "'-'", "parentheses around a Novikov chain"});
        return Expr::node(Expr::Op::Novikov, {std::move(lhs), std::move(rhs)});
    }

    std::int64_t uint_literal(const Token& t) {
        // Strip leading zeros, then compare by length to avoid overflow.
        std::string digits = t.text;
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        const std::string limit = std::to_string(limit_);
        if (digits.size() > limit.size() || (digits.size() == limit.size() && digits > limit)) {
            throw IndexOverflowError(t.offset, limit_);
        }
        return std::stoll(digits);
    }

    Expr primary() {
        const Token& t = peek();
        switch (t.type) {
            case Tok::Number: {
                ++pos_;
                std::string text = t.text;
                if (accept(Tok::Slash)) {
                    if (peek().type != Tok::Number) fail({"denominator"});
                    const Token& den = next();
                    if (den.text.find_first_not_of('0') == std::string::npos) {
                        throw ParseError(den.offset, {"nonzero denominator"}, "'" + den.text + "'");
                    }
                    text += "/" + den.text;
                }
                return Expr::literal(Rational::parse(text));
            }
            case Tok::Ident:
                return identifier();
            case Tok::LParen: {
                ++pos_;
                Expr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::LBrack: {
                ++pos_;
                Expr lhs = expr();
                expect(Tok::Comma, "','");
                Expr rhs = expr();
                expect(Tok::RBrack, "']'");
                return Expr::node(Expr::Op::Bracket, {std::move(lhs), std::move(rhs)});
            }
            default:
                fail({"a_<n>", "b_<n>", "number", "'('", "'['", "'D0('", "'der('", "'-'"});
        }
    }

    Expr identifier() {
        const Token t = next();
        if (t.text == "D0") {
            expect(Tok::LParen, "'('");
            Expr e = expr();
            expect(Tok::RParen, "')'");
            return Expr::node(Expr::Op::D0, {std::move(e)});
        }
        if (t.text == "der") {
            expect(Tok::LParen, "'('");
            Expr m = expr();
            expect(Tok::Semi, "';'");
            Expr e = expr();
            expect(Tok::RParen, "')'");
            return Expr::node(Expr::Op::Derivation, {std::move(m), std::move(e)});
        }
        if (t.text.size() > 2 && (t.text[0] == 'a' || t.text[0] == 'b') && t.text[1] == '_') {
            const std::string digits = t.text.substr(2);
            if (digits.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(t.offset, {"a_<n>", "b_<n>"}, "'" + t.text + "'");
            }
            const Token num{Tok::Number, digits, t.offset + 2};
            return Expr::symbol(t.text[0] == 'a' ? Kind::A : Kind::B, uint_literal(num));
        }
        --pos_;
        fail({"a_<n>", "b_<n>", "number", "'('", "'['", "'D0('", "'der('", "'-'"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::int64_t limit_;
};

const char* op_name(Expr::Op op) {
    switch (op) {
        case Expr::Op::Sum: return "add";
        case Expr::Op::Difference: return "sub";
        case Expr::Op::Negate: return "neg";
        case Expr::Op::Product: return "mul";
        case Expr::Op::Novikov: return "circ";
        case Expr::Op::Bracket: return "bracket";
        case Expr::Op::D0: return "D0";
        case Expr::Op::Derivation: return "der";
        default: return "?";
    }
}

void guard(const Element& x, std::int64_t limit) {
    if (x.max_index() > limit) {
        throw std::overflow_error("intermediate index " + std::to_string(x.max_index()) +
                                  " exceeds the limit " + std::to_string(limit));
    }
}

}  // namespace

Expr parse(std::string_view input, std::int64_t index_limit) {
    return Parser(Lexer(input).run(), index_limit).parse_all();
}

std::string describe(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Symbol:
            return (e.kind == Kind::A ? "a_" : "b_") + std::to_string(e.index);
        case Expr::Op::Literal:
            return e.value.str();
        default: {
            std::string out = "(";
            out += op_name(e.op);
            for (const auto& a : e.args) out += " " + describe(a);
            return out + ")";
        }
    }
}

Element evaluate(const Expr& e, const Element& param, std::int64_t index_limit) {
    auto arg = [&](std::size_t i) { return evaluate(e.args.at(i), param, index_limit); };
    Element out;
    switch (e.op) {
        case Expr::Op::Symbol:
            return e.kind == Kind::A ? canonical_a(e.index) : canonical_b(e.index);
        case Expr::Op::Literal:
            return Element::constant(e.value);
        case Expr::Op::Sum: out = arg(0) + arg(1); break;
        case Expr::Op::Difference: out = arg(0) - arg(1); break;
        case Expr::Op::Negate: out = -arg(0); break;
        case Expr::Op::Product: out = mul(arg(0), arg(1)); break;
        case Expr::Op::Novikov: out = circ(arg(0), arg(1), param); break;
        case Expr::Op::Bracket: out = lie_bracket(arg(0), arg(1), param); break;
        case Expr::Op::D0: out = d0(arg(0)); break;
        case Expr::Op::Derivation: out = apply(MultiplierDerivation(arg(0)), arg(1)); break;
    }
    guard(out, index_limit);
    return out;
}

Element evaluate(std::string_view input, const Element& param, std::int64_t index_limit) {
    return evaluate(parse(input, index_limit), param, index_limit);
}

FunctionRepr evaluate_realized(const Expr& e, const Element& param) {
    auto arg = [&](std::size_t i) { return evaluate_realized(e.args.at(i), param); };
    switch (e.op) {
        case Expr::Op::Symbol:
            return phi(e.kind == Kind::A ? canonical_a(e.index) : canonical_b(e.index));
        case Expr::Op::Literal:
            return e.value * FunctionRepr::one();
        case Expr::Op::Sum: return arg(0) + arg(1);
        case Expr::Op::Difference: return arg(0) - arg(1);
        case Expr::Op::Negate: return Rational(-1) * arg(0);
        case Expr::Op::Product: return t_mul(arg(0), arg(1));
        case Expr::Op::Novikov:
            return t_mul(t_mul(arg(0), phi(param)), t_derivative(arg(1)));
        case Expr::Op::Bracket: {
            const FunctionRepr f = arg(0);
            const FunctionRepr g = arg(1);
            const FunctionRepr p = phi(param);
            return t_mul(t_mul(f, p), t_derivative(g)) - t_mul(t_mul(g, p), t_derivative(f));
        }
        case Expr::Op::D0: return t_derivative(arg(0));
        case Expr::Op::Derivation: return t_mul(arg(0), t_derivative(arg(1)));
    }
    return {};
}

namespace {

// Jet: value and the first (size - 1) derivatives at a point.
using Jet = std::vector<double>;

int derivative_depth(const Expr& e) {
    int inner = 0;
    for (const auto& a : e.args) inner = std::max(inner, derivative_depth(a));
    switch (e.op) {
        case Expr::Op::D0:
        case Expr::Op::Novikov:
        case Expr::Op::Bracket:
        case Expr::Op::Derivation:
            return inner + 1;
        default:
            return inner;
    }
}

Jet element_jet(const Element& x, double at, std::size_t order) {
    Jet j(order, 0.0);
    for (const auto& [s, c] : x.terms()) {
        const double n = static_cast<double>(s.index);
        if (n * std::fabs(at) > kEvalGuard) {
            throw std::range_error("pointwise evaluation outside the eval guard");
        }
        const double sh = std::sinh(n * at);
        const double ch = std::cosh(n * at);
        double scale = c.to_double();
        // k-th derivative alternates between the function and its partner.
        for (std::size_t k = 0; k < order; ++k) {
            const bool own = k % 2 == 0;
            j[k] += scale * (s.kind == Kind::A ? (own ? sh : ch) : (own ? ch : sh));
            scale *= n;
        }
    }
    return j;
}

Jet jet_mul(const Jet& f, const Jet& g) {
    Jet out(f.size(), 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        double binom = 1.0;
        for (std::size_t i = 0; i <= k; ++i) {
            out[k] += binom * f[i] * g[k - i];
            binom = binom * static_cast<double>(k - i) / static_cast<double>(i + 1);
        }
    }
    return out;
}

Jet jet_derivative(const Jet& f) {
    Jet out(f.size(), 0.0);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) out[k] = f[k + 1];
    return out;
}

Jet jet_combine(const Jet& f, const Jet& g, double sign) {
    Jet out = f;
    for (std::size_t k = 0; k < f.size(); ++k) out[k] += sign * g[k];
    return out;
}

Jet evaluate_jet(const Expr& e, const Element& param, double at, std::size_t order) {
    auto arg = [&](std::size_t i) { return evaluate_jet(e.args.at(i), param, at, order); };
    switch (e.op) {
        case Expr::Op::Symbol:
            return element_jet(e.kind == Kind::A ? canonical_a(e.index) : canonical_b(e.index), at,
                               order);
        case Expr::Op::Literal: {
            Jet j(order, 0.0);
            j[0] = e.value.to_double();
            return j;
        }
        case Expr::Op::Sum: return jet_combine(arg(0), arg(1), 1.0);
        case Expr::Op::Difference: return jet_combine(arg(0), arg(1), -1.0);
        case Expr::Op::Negate: return jet_combine(Jet(order, 0.0), arg(0), -1.0);
        case Expr::Op::Product: return jet_mul(arg(0), arg(1));
        case Expr::Op::Novikov:
            return jet_mul(jet_mul(arg(0), element_jet(param, at, order)), jet_derivative(arg(1)));
        case Expr::Op::Bracket: {
            const Jet f = arg(0);
            const Jet g = arg(1);
            const Jet p = element_jet(param, at, order);
            return jet_combine(jet_mul(jet_mul(f, p), jet_derivative(g)),
                               jet_mul(jet_mul(g, p), jet_derivative(f)), -1.0);
        }
        case Expr::Op::D0: return jet_derivative(arg(0));
        case Expr::Op::Derivation: return jet_mul(arg(0), jet_derivative(arg(1)));
    }
    return Jet(order, 0.0);
}

}  // namespace

double evaluate_pointwise(const Expr& e, const Element& param, double x) {
    const auto order = static_cast<std::size_t>(derivative_depth(e)) + 1;
    return evaluate_jet(e, param, x, order)[0];
}

}  // namespace novikov
