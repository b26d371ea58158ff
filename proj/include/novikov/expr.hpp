#pragma once

#include "novikov/element.hpp"
#include "novikov/realization.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// Expression tree over the algebra.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | novikov
///   novikov := primary ('o' primary)?        -- chains need parentheses
///   primary := 'a_' uint | 'b_' uint | uint ('/' uint)?
///            | '(' expr ')' | '[' expr ',' expr ']'
///            | 'D0' '(' expr ')' | 'der' '(' expr ';' expr ')'
///
/// A rational literal c denotes c * b_0. der(m; e) applies the derivation
/// with multiplier m to e.
struct Expr {
    enum class Op {
        Symbol,
        Literal,
        Sum,
        Difference,
        Negate,
        Product,
        Novikov,
        Bracket,
        D0,
        Derivation,
    };

    Op op = Op::Literal;
    Kind kind = Kind::B;     // Symbol
    std::int64_t index = 0;  // Symbol; a_0 is allowed and evaluates to zero
    Rational value;          // Literal
    std::vector<Expr> args;

    static Expr symbol(Kind kind, std::int64_t index);
    static Expr literal(Rational value);
    static Expr node(Op op, std::vector<Expr> args);

    friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class IndexOverflowError : public std::runtime_error {
public:
    IndexOverflowError(std::size_t offset, std::int64_t limit);

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr std::int64_t kDefaultIndexLimit = 1'000'000;

/// Throws ParseError or IndexOverflowError. Literal indices above
/// index_limit are rejected.
Expr parse(std::string_view input, std::int64_t index_limit = kDefaultIndexLimit);

/// S-expression form of the tree, e.g. "(mul a_2 a_3)".
std::string describe(const Expr& e);

/// Interprets '*' as mul, 'o' as circ(., ., param), [x, y] as
/// lie_bracket(., ., param), D0 as d0. Throws std::overflow_error if an
/// intermediate result carries an index above index_limit.
Element evaluate(const Expr& e, const Element& param,
                 std::int64_t index_limit = kDefaultIndexLimit);

/// Convenience: parse then evaluate.
Element evaluate(std::string_view input, const Element& param,
                 std::int64_t index_limit = kDefaultIndexLimit);

/// Evaluates the tree inside the function algebra: symbols map through phi,
/// products use t_mul, D0 is d/dx, and x o y = x * phi(param) * y'.
FunctionRepr evaluate_realized(const Expr& e, const Element& param);

/// Pointwise value of the realized expression at x, computed on truncated
/// Taylor jets of sinh/cosh (value and derivatives) rather than through the
/// product tables. Throws std::range_error outside the eval guard.
double evaluate_pointwise(const Expr& e, const Element& param, double x);

}  // namespace novikov
