#include "novikov/novikov.hpp"

namespace novikov {

Element circ(const Element& x, const Element& y, const Element& param) {
    return mul(x, mul(param, d0(y)));
}

Element closed_circ(const BasisSymbol& s, const BasisSymbol& t) {
    const std::int64_t n = s.index;
    const std::int64_t m = t.index;
    const Rational h(m, 2);
    const std::int64_t sum = checked_add(n, m);
    const std::int64_t n_minus_m = checked_sub(n, m);
    Element out;
    if (s.kind == Kind::A && t.kind == Kind::A) {
        out.add_signed(Kind::A, sum, h);
        out.add_signed(Kind::A, n_minus_m, h);
    } else if (s.kind == Kind::B && t.kind == Kind::B) {
        out.add_signed(Kind::A, sum, h);
        out.add_signed(Kind::A, checked_sub(m, n), h);
    } else if (s.kind == Kind::A) {
        out.add_signed(Kind::B, sum, h);
        out.add_signed(Kind::B, n_minus_m, -h);
    } else {
        out.add_signed(Kind::B, sum, h);
        out.add_signed(Kind::B, n_minus_m, h);
    }
    return out;
}

Element lie_bracket(const Element& x, const Element& y, const Element& param) {
    return circ(x, y, param) - circ(y, x, param);
}

Element factored_bracket(const Element& x, const Element& y, const Element& param) {
    return mul(param, mul(x, d0(y)) - mul(y, d0(x)));
}

Element closed_bracket(const BasisSymbol& s, const BasisSymbol& t) {
    const std::int64_t n = s.index;
    const std::int64_t m = t.index;
    const Rational lead(checked_sub(m, n), 2);
    const Rational tail(checked_add(m, n), 2);
    const std::int64_t sum = checked_add(n, m);
    const std::int64_t n_minus_m = checked_sub(n, m);
    Element out;
    if (s.kind == Kind::A && t.kind == Kind::A) {
        out.add_signed(Kind::A, sum, lead);
        out.add_signed(Kind::A, n_minus_m, tail);
    } else if (s.kind == Kind::B && t.kind == Kind::B) {
        out.add_signed(Kind::A, sum, lead);
        out.add_signed(Kind::A, n_minus_m, -tail);
    } else if (s.kind == Kind::A) {
        out.add_signed(Kind::B, sum, lead);
        out.add_signed(Kind::B, n_minus_m, -tail);
    } else {
        out.add_signed(Kind::B, sum, lead);
        out.add_signed(Kind::B, n_minus_m, tail);
    }
    return out;
}

Element left_symmetry_residual(const Element& x, const Element& y, const Element& z,
                               const Element& param) {
    const Element lhs = circ(x, circ(y, z, param), param) - circ(circ(x, y, param), z, param);
    const Element rhs = circ(y, circ(x, z, param), param) - circ(circ(y, x, param), z, param);
    return lhs - rhs;
}

Element right_commutativity_residual(const Element& x, const Element& y, const Element& z,
                                     const Element& param) {
    return circ(circ(x, y, param), z, param) - circ(circ(x, z, param), y, param);
}

std::pair<Element, Element> hamilton_residuals(const Element& x, const Element& y,
                                               const Element& z, const Element& param) {
    const Element xy = circ(x, y, param);
    const Element zy = circ(z, y, param);
    const Element xy_z = circ(xy, z, param);
    Element first = xy_z - circ(circ(x, z, param), y, param);
    Element second = xy_z + circ(z, xy, param) - circ(zy, x, param) - circ(x, zy, param);
    return {std::move(first), std::move(second)};
}

Element jacobi_residual(const Element& x, const Element& y, const Element& z,
                        const Element& param) {
    return lie_bracket(lie_bracket(x, y, param), z, param) +
           lie_bracket(lie_bracket(y, z, param), x, param) +
           lie_bracket(lie_bracket(z, x, param), y, param);
}

}  // namespace novikov
