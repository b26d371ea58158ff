#include "novikov/derivation.hpp"

namespace novikov {

Element d0(const Element& x) {
    Element out;
    for (const auto& [s, c] : x.terms()) {
        if (s.index == 0) continue;
        const Kind image = s.kind == Kind::A ? Kind::B : Kind::A;
        out.add_term({image, s.index}, c * Rational(s.index));
    }
    return out;
}

Element MultiplierDerivation::operator()(const Element& x) const {
    // D0 first, then the multiplier.
    return mul(multiplier_, d0(x));
}

Element apply(const MultiplierDerivation& d, const Element& x) { return d(x); }

MultiplierDerivation derivation_bracket(const MultiplierDerivation& d1,
                                        const MultiplierDerivation& d2) {
    const Element& a = d1.multiplier();
    const Element& b = d2.multiplier();
    return MultiplierDerivation(mul(a, d0(b)) - mul(b, d0(a)));
}

Element leibniz_residual(const MultiplierDerivation& d, const Element& x, const Element& y) {
    return d(mul(x, y)) - mul(d(x), y) - mul(x, d(y));
}

}  // namespace novikov
