#pragma once

#include "novikov/rational.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace novikov {

enum class Kind : std::uint8_t { A, B };

/// One basis vector: a_n (n >= 1) or b_m (m >= 0).
struct BasisSymbol {
    Kind kind = Kind::B;
    std::int64_t index = 0;

    static BasisSymbol a(std::int64_t n);  // throws std::invalid_argument unless n >= 1
    static BasisSymbol b(std::int64_t m);  // throws std::invalid_argument unless m >= 0

    std::string str() const;

    friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Canonical order: ascending index, b before a at equal index.
struct CanonicalOrder {
    bool operator()(const BasisSymbol& lhs, const BasisSymbol& rhs) const {
        if (lhs.index != rhs.index) return lhs.index < rhs.index;
        return lhs.kind == Kind::B && rhs.kind == Kind::A;
    }
};

/// Finite linear combination of basis symbols with rational coefficients.
/// Zero coefficients are never stored; the zero element has no terms.
class Element {
public:
    using TermMap = std::map<BasisSymbol, Rational, CanonicalOrder>;

    Element() = default;

    static Element basis(BasisSymbol s, Rational coeff = Rational(1));
    static Element unity() { return basis(BasisSymbol::b(0)); }
    static Element constant(const Rational& c) { return basis(BasisSymbol::b(0), c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const BasisSymbol& s) const;
    std::int64_t max_index() const;

    /// Adds c * s. Zero sums are erased.
    void add_term(const BasisSymbol& s, const Rational& c);

    /// Adds c * a_n or c * b_n for a signed, not yet normalised index:
    /// a_{-n} = -a_n, a_0 = 0, b_{-n} = b_n.
    void add_signed(Kind kind, std::int64_t index, const Rational& c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element operator-() const;

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Rational& c, const Element& x);

    friend bool operator==(const Element&, const Element&) = default;

private:
    TermMap terms_;
};

/// a_n with a_{-n} = -a_n and a_0 = 0.
Element canonical_a(std::int64_t n);
/// b_{|m|}.
Element canonical_b(std::int64_t m);

Element add(const Element& x, const Element& y);
Element scale(const Rational& c, const Element& x);

/// Commutative associative product given on basis symbols by
///   a_m a_n = (b_{m+n} - b_{m-n}) / 2
///   b_m b_n = (b_{m+n} + b_{m-n}) / 2
///   a_m b_n = (a_{m+n} + a_{m-n}) / 2
/// and extended bilinearly.
Element mul(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);

/// x(yz) - (xy)z
Element associator(const Element& x, const Element& y, const Element& z);

/// Human-readable form, e.g. "1/2*b_5 - 1/2*b_1". Terms run from the
/// highest index down; "0" for the zero element. Re-parses to the same value.
std::string to_string(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

/// Index sum with overflow detection (throws std::overflow_error).
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);

}  // namespace novikov
