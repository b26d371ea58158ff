#include "novikov/expr.hpp"
#include "novikov/random.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace novikov;

namespace {

const Element one = Element::unity();

Element a(std::int64_t n, Rational c = Rational(1)) { return Element::basis(BasisSymbol::a(n), c); }
Element b(std::int64_t m, Rational c = Rational(1)) { return Element::basis(BasisSymbol::b(m), c); }

ParseError parse_error(std::string_view text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse shapes") {
    CHECK(describe(parse("a_2 * a_3")) == "(mul a_2 a_3)");
    CHECK(describe(parse("[a_1, b_2]")) == "(bracket a_1 b_2)");
    CHECK(describe(parse("1/2 * b_5 - 1/2 * b_1")) == "(sub (mul 1/2 b_5) (mul 1/2 b_1))");
    CHECK(describe(parse("a_1 o a_2")) == "(circ a_1 a_2)");
    CHECK(describe(parse("(a_1 o a_2) o b_3")) == "(circ (circ a_1 a_2) b_3)");
    CHECK(describe(parse("D0(b_0)")) == "(D0 b_0)");
    CHECK(describe(parse("der(a_1; b_1 + a_2)")) == "(der a_1 (add b_1 a_2))");
    CHECK(describe(parse("-a_1 + -2*b_2")) == "(add (neg a_1) (mul (neg 2) b_2))");
    CHECK(describe(parse("  a_1*a_2*a_3  ")) == "(mul (mul a_1 a_2) a_3)");
    // 'o' binds tighter than '*'.
    CHECK(describe(parse("b_1 * a_1 o a_2")) == "(mul b_1 (circ a_1 a_2))");
    CHECK(describe(parse("a_0")) == "a_0");
}

TEST_CASE("parse errors carry offset and expectations") {
    const auto e1 = parse_error("a_2 *");
    CHECK(e1.offset() == 5);
    CHECK(std::find(e1.expected().begin(), e1.expected().end(), "a_<n>") != e1.expected().end());

    const auto e2 = parse_error("a_1 o a_2 o a_3");
    CHECK(e2.offset() == 10);

    CHECK(parse_error("[a_1 b_2]").offset() == 5);
    CHECK(parse_error("c_1").offset() == 0);
    CHECK(parse_error("a_x").offset() == 0);
    CHECK(parse_error("a_1 $ b_1").offset() == 4);
    CHECK(parse_error("1/0").offset() == 2);
    CHECK(parse_error("(a_1").offset() == 4);
    CHECK(parse_error("").offset() == 0);
    CHECK(parse_error("a_1 a_2").offset() == 4);
}

TEST_CASE("index limits") {
    CHECK_THROWS_AS(parse("a_1000001"), IndexOverflowError);
    CHECK_NOTHROW(parse("a_1000000"));
    CHECK_THROWS_AS(parse("b_99999999999999999999999"), IndexOverflowError);
    CHECK_THROWS_AS(parse("a_11", 10), IndexOverflowError);
    CHECK_THROWS_AS(evaluate("a_6 * a_6", one, 10), std::overflow_error);
}

TEST_CASE("evaluate values") {
    const Rational half(1, 2);
    CHECK(evaluate("a_2 * a_3", a(4)) == b(5, half) - b(1, half));
    CHECK(evaluate("a_1 o a_2", one) == a(3) - a(1));
    CHECK(evaluate("D0(b_0)", one).is_zero());
    CHECK(evaluate("a_0 + b_1", one) == b(1));
    CHECK(evaluate("[b_2, a_2]", one) == b(0, Rational(2)));
    CHECK(evaluate("der(a_1; b_1)", one) == b(2, half) - b(0, half));
    CHECK(evaluate("3", one) == b(0, Rational(3)));
    CHECK(evaluate("a_1 o a_2", a(1)) == oracle::circ(a(1), a(2), a(1)));
}

TEST_CASE("printed output re-parses to the same element") {
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        auto rng = trial_engine(31, trial);
        Element x = random_element(rng, 9);
        x = x + Rational(1, static_cast<std::int64_t>(trial % 5) + 2) * random_element(rng, 9);
        const std::string printed = to_string(x);
        const Element back = evaluate(printed, one);
        CHECK_MESSAGE(back == x, printed);
        CHECK(to_string(back) == printed);
    }
}

TEST_CASE("expression trees agree with the Laurent model") {
    const char* exprs[] = {
        "a_2 * a_3 - D0(b_4 o a_1)",
        "[a_1 + b_2, (b_1 o a_3) - 2*b_0]",
        "der(a_2 - b_1; a_3 * b_3) + 1/3 * D0(D0(a_5))",
        "((a_1 o b_2) o a_1) - (a_1 o a_1) o b_2",
    };
    const Element param = a(1) + b(1);
    for (const char* text : exprs) {
        const Expr e = parse(text);
        CHECK(evaluate(e, param) ==
              oracle::evaluate(e, oracle::Laurent::from(param)).to_element());
        CHECK(phi(evaluate(e, param)) == evaluate_realized(e, param));
        for (double x : default_samples()) {
            const double exact = eval(phi(evaluate(e, param)), x);
            CHECK(std::fabs(evaluate_pointwise(e, param, x) - exact) <=
                  1e-9 * (1.0 + std::fabs(exact)));
        }
    }
}
