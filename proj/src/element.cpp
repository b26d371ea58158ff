#include "novikov/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace novikov {

BasisSymbol BasisSymbol::a(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("a_n requires n >= 1");
    return {Kind::A, n};
}

BasisSymbol BasisSymbol::b(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("b_m requires m >= 0");
    return {Kind::B, m};
}

std::string BasisSymbol::str() const {
    return (kind == Kind::A ? "a_" : "b_") + std::to_string(index);
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("basis index overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("basis index overflow");
    return r;
}

Element Element::basis(BasisSymbol s, Rational coeff) {
    Element e;
    e.add_term(s, coeff);
    return e;
}

Rational Element::coeff(const BasisSymbol& s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t Element::max_index() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.index;
}

void Element::add_term(const BasisSymbol& s, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_signed(Kind kind, std::int64_t index, const Rational& c) {
    if (kind == Kind::B) {
        add_term({Kind::B, index < 0 ? checked_sub(0, index) : index}, c);
        return;
    }
    if (index == 0) return;
    if (index < 0) {
        add_term({Kind::A, checked_sub(0, index)}, -c);
    } else {
        add_term({Kind::A, index}, c);
    }
}

Element& Element::operator+=(const Element& rhs) {
    for (const auto& [s, c] : rhs.terms_) add_term(s, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
    return *this;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
}

Element operator*(const Rational& c, const Element& x) {
    if (c.is_zero()) return {};
    Element r = x;
    for (auto& [s, v] : r.terms_) v *= c;
    return r;
}

Element canonical_a(std::int64_t n) {
    Element e;
    e.add_signed(Kind::A, n, Rational(1));
    return e;
}

Element canonical_b(std::int64_t m) {
    Element e;
    e.add_signed(Kind::B, m, Rational(1));
    return e;
}

Element add(const Element& x, const Element& y) { return x + y; }

Element scale(const Rational& c, const Element& x) { return c * x; }

namespace {

const Rational kHalf(1, 2);

// Accumulates c * (s * t) into out.
void mul_basis(const BasisSymbol& s, const BasisSymbol& t, const Rational& c, Element& out) {
    const Rational h = c * kHalf;
    const std::int64_t sum = checked_add(s.index, t.index);
    const std::int64_t diff = checked_sub(s.index, t.index);
    if (s.kind == Kind::A && t.kind == Kind::A) {
        out.add_signed(Kind::B, sum, h);
        out.add_signed(Kind::B, diff, -h);
    } else if (s.kind == Kind::B && t.kind == Kind::B) {
        out.add_signed(Kind::B, sum, h);
        out.add_signed(Kind::B, diff, h);
    } else {
        // a_m b_n = b_n a_m = (a_{m+n} + a_{m-n}) / 2, with m the a-index.
        const std::int64_t a_minus_b = s.kind == Kind::A ? diff : checked_sub(0, diff);
        out.add_signed(Kind::A, sum, h);
        out.add_signed(Kind::A, a_minus_b, h);
    }
}

}  // namespace

Element mul(const Element& x, const Element& y) {
    Element out;
    for (const auto& [s, cs] : x.terms()) {
        for (const auto& [t, ct] : y.terms()) {
            mul_basis(s, t, cs * ct, out);
        }
    }
    return out;
}

Element operator*(const Element& x, const Element& y) { return mul(x, y); }

Element associator(const Element& x, const Element& y, const Element& z) {
    return mul(x, mul(y, z)) - mul(mul(x, y), z);
}

std::string to_string(const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    std::vector<std::pair<BasisSymbol, Rational>> order(x.terms().begin(), x.terms().end());
    std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
        if (l.first.index != r.first.index) return l.first.index > r.first.index;
        return l.first.kind == Kind::B && r.first.kind == Kind::A;
    });
    bool first = true;
    for (const auto& [s, c] : order) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            mag = c.abs();
        }
        if (mag != Rational(1)) os << mag.str() << '*';
        os << s.str();
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace novikov
