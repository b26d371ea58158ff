#pragma once

#include "novikov/element.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

/// Finite combination of sinh(n x) (n >= 1) and cosh(m x) (m >= 0), with
/// cosh(0 x) = 1. Products follow the product-to-sum identities.
class FunctionRepr {
public:
    using Terms = std::map<std::int64_t, Rational>;

    FunctionRepr() = default;

    static FunctionRepr sinh(std::int64_t n, Rational coeff = Rational(1));
    static FunctionRepr cosh(std::int64_t m, Rational coeff = Rational(1));
    static FunctionRepr one() { return cosh(0); }

    const Terms& sinh_terms() const { return sinh_; }
    const Terms& cosh_terms() const { return cosh_; }
    bool is_zero() const { return sinh_.empty() && cosh_.empty(); }
    std::int64_t max_index() const;

    /// Adds c sinh(k x) for signed k: sinh(-k x) = -sinh(k x), sinh(0) = 0.
    void add_sinh(std::int64_t k, const Rational& c);
    /// Adds c cosh(k x) for signed k: cosh(-k x) = cosh(k x).
    void add_cosh(std::int64_t k, const Rational& c);

    FunctionRepr& operator+=(const FunctionRepr& rhs);
    FunctionRepr& operator-=(const FunctionRepr& rhs);
    friend FunctionRepr operator+(FunctionRepr l, const FunctionRepr& r) { return l += r; }
    friend FunctionRepr operator-(FunctionRepr l, const FunctionRepr& r) { return l -= r; }
    friend FunctionRepr operator*(const Rational& c, const FunctionRepr& f);

    friend bool operator==(const FunctionRepr&, const FunctionRepr&) = default;

private:
    Terms sinh_;
    Terms cosh_;
};

/// a_n -> sinh(n x), b_m -> cosh(m x); coefficients unchanged.
FunctionRepr phi(const Element& x);
Element phi_inv(const FunctionRepr& f);

/// Pointwise product, computed with
///   sinh(mx) sinh(nx) = (cosh((m+n)x) - cosh((m-n)x)) / 2
///   cosh(mx) cosh(nx) = (cosh((m+n)x) + cosh((m-n)x)) / 2
///   sinh(mx) cosh(nx) = (sinh((m+n)x) + sinh((m-n)x)) / 2
FunctionRepr t_mul(const FunctionRepr& f, const FunctionRepr& g);

/// d/dx, termwise.
FunctionRepr t_derivative(const FunctionRepr& f);

/// index * |x| must not exceed this for eval.
inline constexpr double kEvalGuard = 30.0;

/// Floating-point value at x. Throws std::range_error if some term has
/// index * |x| > kEvalGuard.
double eval(const FunctionRepr& f, double x);

/// e.g. "1/2*cosh(5x) - 1/2*cosh(x)"; the constant term prints as a number.
std::string to_string(const FunctionRepr& f);

/// Exact determinants of the n x n matrices with entries i^(2k-1) and
/// i^(2k) (row k, column i, both 1..n). Both nonzero iff
/// {1, sinh x, cosh x, ..., sinh nx, cosh nx} is linearly independent.
struct VandermondePair {
    mpz_class odd;
    mpz_class even;
};
VandermondePair vandermonde_independence(int n);

/// Fraction-free (Bareiss) determinant of a square integer matrix given
/// row-major.
mpz_class bareiss_determinant(std::vector<mpz_class> matrix, std::size_t n);

/// Evaluates 1, sinh x, cosh x, ..., sinh nx, cosh nx at the samples and
/// reports whether the sample matrix has full column rank (row-scaled
/// partial-pivot elimination, pivot threshold 1e-8). Throws
/// std::invalid_argument if there are fewer than 2n+1 distinct samples.
bool numeric_rank_independence(int n, std::span<const double> samples);

/// count points evenly spaced on [lo, hi].
std::vector<double> equispaced(double lo, double hi, std::size_t count);

std::vector<double> default_samples();

}  // namespace novikov
