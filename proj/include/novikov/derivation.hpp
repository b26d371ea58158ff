#pragma once

#include "novikov/element.hpp"

namespace novikov {

/// The base derivation: D0(a_n) = n b_n, D0(b_n) = n a_n, extended linearly.
Element d0(const Element& x);

/// The derivation x -> multiplier * D0(x). D0 itself is the one with
/// multiplier b_0.
class MultiplierDerivation {
public:
    MultiplierDerivation() : multiplier_(Element::unity()) {}
    explicit MultiplierDerivation(Element multiplier) : multiplier_(std::move(multiplier)) {}

    static MultiplierDerivation base() { return MultiplierDerivation(); }

    const Element& multiplier() const { return multiplier_; }

    Element operator()(const Element& x) const;

    friend bool operator==(const MultiplierDerivation&, const MultiplierDerivation&) = default;

private:
    Element multiplier_;
};

Element apply(const MultiplierDerivation& d, const Element& x);

/// [aD0, bD0] = (a D0(b) - b D0(a)) D0.
MultiplierDerivation derivation_bracket(const MultiplierDerivation& d1,
                                        const MultiplierDerivation& d2);

/// D(xy) - D(x) y - x D(y); zero iff D obeys the Leibniz rule on (x, y).
Element leibniz_residual(const MultiplierDerivation& d, const Element& x, const Element& y);

}  // namespace novikov
