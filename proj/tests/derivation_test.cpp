#include "novikov/derivation.hpp"
#include "novikov/random.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace novikov;

namespace {

Element a(std::int64_t n, Rational c = Rational(1)) { return Element::basis(BasisSymbol::a(n), c); }
Element b(std::int64_t m, Rational c = Rational(1)) { return Element::basis(BasisSymbol::b(m), c); }
const Rational half(1, 2);

MultiplierDerivation with(Element m) { return MultiplierDerivation(std::move(m)); }

}  // namespace

TEST_CASE("d0 on basis and sums") {
    CHECK(d0(a(3)) == b(3, Rational(3)));
    CHECK(d0(b(0)).is_zero());
    CHECK(d0(a(1, half) + b(5)) == b(1, half) + a(5, Rational(5)));
    CHECK(d0(a(1, half) + b(5)) == oracle::d0(a(1, half) + b(5)));
}

TEST_CASE("multiplier derivations") {
    CHECK(apply(MultiplierDerivation::base(), a(4)) == b(4, Rational(4)));
    CHECK(apply(with(a(1)), b(1)) == b(2, half) - b(0, half));
    CHECK(apply(with(a(1)), b(1)) == oracle::mul(a(1), oracle::d0(b(1))));
    CHECK(apply(with(a(3) - b(2)), b(0)).is_zero());
}

TEST_CASE("derivation bracket values") {
    const auto d = with(a(2) + b(1, Rational(3)));
    CHECK(derivation_bracket(d, d).multiplier().is_zero());

    const auto ab = derivation_bracket(with(a(1)), with(b(1)));
    CHECK(ab.multiplier() == -b(0));
    const auto ba = derivation_bracket(MultiplierDerivation::base(), with(a(1)));
    CHECK(ba.multiplier() == b(1));

    // The bracket acts as the commutator of the two derivations.
    for (std::int64_t k = 0; k <= 5; ++k) {
        for (const Element& s : {b(k), k > 0 ? a(k) : Element{}}) {
            const Element comm1 = apply(with(a(1)), apply(with(b(1)), s)) -
                                  apply(with(b(1)), apply(with(a(1)), s));
            CHECK(apply(ab, s) == comm1);
            const Element comm2 = d0(apply(with(a(1)), s)) - apply(with(a(1)), d0(s));
            CHECK(apply(ba, s) == comm2);
        }
    }
}

TEST_CASE("leibniz residual examples") {
    CHECK(leibniz_residual(MultiplierDerivation::base(), a(2), a(3)).is_zero());
    CHECK(leibniz_residual(with(a(1)), b(2), b(4)).is_zero());
    CHECK(leibniz_residual(with(a(7) - b(3)), b(0), b(0)).is_zero());
}

TEST_CASE("derivation properties on random multipliers") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = trial_engine(21, trial);
        const auto d1 = with(random_element(rng, 6));
        const auto d2 = with(random_element(rng, 6));
        const auto d3 = with(random_element(rng, 6));
        const Element x = random_element(rng, 6);
        const Element y = random_element(rng, 6);

        CHECK(leibniz_residual(d1, x, y).is_zero());
        CHECK(apply(d1, x) == oracle::mul(d1.multiplier(), oracle::d0(x)));
        CHECK(derivation_bracket(d1, d2).multiplier() ==
              -derivation_bracket(d2, d1).multiplier());
        const Element jacobi =
            derivation_bracket(derivation_bracket(d1, d2), d3).multiplier() +
            derivation_bracket(derivation_bracket(d2, d3), d1).multiplier() +
            derivation_bracket(derivation_bracket(d3, d1), d2).multiplier();
        CHECK(jacobi.is_zero());
        CHECK(apply(derivation_bracket(d1, d2), x) ==
              apply(d1, apply(d2, x)) - apply(d2, apply(d1, x)));
    }
}
