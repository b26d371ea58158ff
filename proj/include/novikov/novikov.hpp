#pragma once

#include "novikov/derivation.hpp"

#include <utility>

namespace novikov {

// Novikov product x o y = x * a * D0(y) for a fixed parameter a, and the
// adjoining Lie bracket [x, y] = x o y - y o x. Residual functions return
// the difference of the two sides of an identity so a failure carries the
// offending element.

Element circ(const Element& x, const Element& y, const Element& param);

/// x o y at param = b_0, read directly off the closed-form table:
///   a_n o a_m = m/2 (a_{n+m} + a_{n-m})
///   b_n o b_m = m/2 (a_{n+m} + a_{m-n})
///   a_n o b_m = m/2 (b_{n+m} - b_{n-m})
///   b_n o a_m = m/2 (b_{n+m} + b_{n-m})
Element closed_circ(const BasisSymbol& s, const BasisSymbol& t);

Element lie_bracket(const Element& x, const Element& y, const Element& param);

/// a (x D0(y) - y D0(x)); must agree with lie_bracket.
Element factored_bracket(const Element& x, const Element& y, const Element& param);

/// [s, t] at param = b_0 from the closed-form table:
///   [a_n, a_m] = (m-n)/2 a_{n+m} + (m+n)/2 a_{n-m}
///   [b_n, b_m] = (m-n)/2 a_{n+m} - (m+n)/2 a_{n-m}
///   [a_n, b_m] = (m-n)/2 b_{n+m} - (n+m)/2 b_{n-m}
///   [b_n, a_m] = (m-n)/2 b_{n+m} + (m+n)/2 b_{n-m}
Element closed_bracket(const BasisSymbol& s, const BasisSymbol& t);

/// x o (y o z) - (x o y) o z - y o (x o z) + (y o x) o z
Element left_symmetry_residual(const Element& x, const Element& y, const Element& z,
                               const Element& param);

/// (x o y) o z - (x o z) o y
Element right_commutativity_residual(const Element& x, const Element& y, const Element& z,
                                     const Element& param);

/// First: (x o y) o z - (x o z) o y.
/// Second: (x o y) o z + z o (x o y) - (z o y) o x - x o (z o y).
std::pair<Element, Element> hamilton_residuals(const Element& x, const Element& y,
                                               const Element& z, const Element& param);

/// [[x,y],z] + [[y,z],x] + [[z,x],y]
Element jacobi_residual(const Element& x, const Element& y, const Element& z,
                        const Element& param);

}  // namespace novikov
