#include "novikov/realization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

void accumulate(FunctionRepr::Terms& terms, std::int64_t k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

FunctionRepr FunctionRepr::sinh(std::int64_t n, Rational coeff) {
    if (n < 1) throw std::invalid_argument("sinh(nx) basis requires n >= 1");
    FunctionRepr f;
    f.add_sinh(n, coeff);
    return f;
}

FunctionRepr FunctionRepr::cosh(std::int64_t m, Rational coeff) {
    if (m < 0) throw std::invalid_argument("cosh(mx) basis requires m >= 0");
    FunctionRepr f;
    f.add_cosh(m, coeff);
    return f;
}

std::int64_t FunctionRepr::max_index() const {
    std::int64_t top = 0;
    if (!sinh_.empty()) top = std::max(top, sinh_.rbegin()->first);
    if (!cosh_.empty()) top = std::max(top, cosh_.rbegin()->first);
    return top;
}

void FunctionRepr::add_sinh(std::int64_t k, const Rational& c) {
    if (k == 0) return;
    if (k < 0) {
        accumulate(sinh_, checked_sub(0, k), -c);
    } else {
        accumulate(sinh_, k, c);
    }
}

void FunctionRepr::add_cosh(std::int64_t k, const Rational& c) {
    accumulate(cosh_, k < 0 ? checked_sub(0, k) : k, c);
}

FunctionRepr& FunctionRepr::operator+=(const FunctionRepr& rhs) {
    for (const auto& [k, c] : rhs.sinh_) accumulate(sinh_, k, c);
    for (const auto& [k, c] : rhs.cosh_) accumulate(cosh_, k, c);
    return *this;
}

FunctionRepr& FunctionRepr::operator-=(const FunctionRepr& rhs) {
    for (const auto& [k, c] : rhs.sinh_) accumulate(sinh_, k, -c);
    for (const auto& [k, c] : rhs.cosh_) accumulate(cosh_, k, -c);
    return *this;
}

FunctionRepr operator*(const Rational& c, const FunctionRepr& f) {
    if (c.is_zero()) return {};
    FunctionRepr r = f;
    for (auto& [k, v] : r.sinh_) v *= c;
    for (auto& [k, v] : r.cosh_) v *= c;
    return r;
}

FunctionRepr phi(const Element& x) {
    FunctionRepr f;
    for (const auto& [s, c] : x.terms()) {
        if (s.kind == Kind::A) {
            f.add_sinh(s.index, c);
        } else {
            f.add_cosh(s.index, c);
        }
    }
    return f;
}

Element phi_inv(const FunctionRepr& f) {
    Element x;
    for (const auto& [k, c] : f.sinh_terms()) x.add_term(BasisSymbol::a(k), c);
    for (const auto& [k, c] : f.cosh_terms()) x.add_term(BasisSymbol::b(k), c);
    return x;
}

FunctionRepr t_mul(const FunctionRepr& f, const FunctionRepr& g) {
    const Rational half(1, 2);
    FunctionRepr out;
    // sinh * sinh
    for (const auto& [m, cf] : f.sinh_terms()) {
        for (const auto& [n, cg] : g.sinh_terms()) {
            const Rational h = cf * cg * half;
            out.add_cosh(checked_add(m, n), h);
            out.add_cosh(checked_sub(m, n), -h);
        }
    }
    // cosh * cosh
    for (const auto& [m, cf] : f.cosh_terms()) {
        for (const auto& [n, cg] : g.cosh_terms()) {
            const Rational h = cf * cg * half;
            out.add_cosh(checked_add(m, n), h);
            out.add_cosh(checked_sub(m, n), h);
        }
    }
    // sinh * cosh, in both orders
    for (const auto& [m, cf] : f.sinh_terms()) {
        for (const auto& [n, cg] : g.cosh_terms()) {
            const Rational h = cf * cg * half;
            out.add_sinh(checked_add(m, n), h);
            out.add_sinh(checked_sub(m, n), h);
        }
    }
    for (const auto& [n, cf] : f.cosh_terms()) {
        for (const auto& [m, cg] : g.sinh_terms()) {
            const Rational h = cf * cg * half;
            out.add_sinh(checked_add(m, n), h);
            out.add_sinh(checked_sub(m, n), h);
        }
    }
    return out;
}

FunctionRepr t_derivative(const FunctionRepr& f) {
    FunctionRepr out;
    for (const auto& [n, c] : f.sinh_terms()) out.add_cosh(n, c * Rational(n));
    for (const auto& [m, c] : f.cosh_terms()) out.add_sinh(m, c * Rational(m));
    return out;
}

double eval(const FunctionRepr& f, double x) {
    const double ax = std::fabs(x);
    if (static_cast<double>(f.max_index()) * ax > kEvalGuard) {
        std::ostringstream os;
        os << "eval: index " << f.max_index() << " at x = " << x << " exceeds the guard "
           << kEvalGuard;
        throw std::range_error(os.str());
    }
    // Terms are accumulated in extended precision: phi of a product can hold
    // large cosh/sinh terms that cancel down to a small value.
    long double sum = 0.0L;
    const long double lx = x;
    for (const auto& [n, c] : f.sinh_terms()) {
        sum += c.to_long_double() * std::sinh(static_cast<long double>(n) * lx);
    }
    for (const auto& [m, c] : f.cosh_terms()) {
        sum += c.to_long_double() * std::cosh(static_cast<long double>(m) * lx);
    }
    return static_cast<double>(sum);
}

std::string to_string(const FunctionRepr& f) {
    if (f.is_zero()) return "0";
    struct Term {
        std::int64_t index;
        bool is_cosh;
        Rational coeff;
    };
    std::vector<Term> order;
    for (const auto& [k, c] : f.cosh_terms()) order.push_back({k, true, c});
    for (const auto& [k, c] : f.sinh_terms()) order.push_back({k, false, c});
    std::stable_sort(order.begin(), order.end(), [](const Term& l, const Term& r) {
        if (l.index != r.index) return l.index > r.index;
        return l.is_cosh && !r.is_cosh;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& t : order) {
        Rational mag = t.coeff;
        if (first) {
            if (t.coeff.sign() < 0) {
                os << '-';
                mag = -t.coeff;
            }
        } else {
            os << (t.coeff.sign() < 0 ? " - " : " + ");
            mag = t.coeff.abs();
        }
        first = false;
        if (t.is_cosh && t.index == 0) {
            os << mag.str();
            continue;
        }
        if (mag != Rational(1)) os << mag.str() << '*';
        os << (t.is_cosh ? "cosh(" : "sinh(");
        if (t.index != 1) os << t.index;
        os << "x)";
    }
    return os.str();
}

mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t n) {
    if (m.size() != n * n) throw std::invalid_argument("bareiss_determinant: size mismatch");
    if (n == 0) return 1;
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return m[r * n + c]; };
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact division: Sylvester's identity guarantees divisibility.
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    mpz_class det = at(n - 1, n - 1);
    return sign < 0 ? mpz_class(-det) : det;
}

VandermondePair vandermonde_independence(int n) {
    if (n < 1) throw std::invalid_argument("vandermonde_independence: n must be >= 1");
    const auto size = static_cast<std::size_t>(n);
    std::vector<mpz_class> odd(size * size);
    std::vector<mpz_class> even(size * size);
    for (std::size_t k = 1; k <= size; ++k) {
        for (std::size_t i = 1; i <= size; ++i) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), i, 2 * k - 1);
            odd[(k - 1) * size + (i - 1)] = p;
            even[(k - 1) * size + (i - 1)] = p * static_cast<unsigned long>(i);
        }
    }
    return {bareiss_determinant(std::move(odd), size), bareiss_determinant(std::move(even), size)};
}

bool numeric_rank_independence(int n, std::span<const double> samples) {
    if (n < 0) throw std::invalid_argument("numeric_rank_independence: n must be >= 0");
    std::vector<double> distinct(samples.begin(), samples.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto cols = static_cast<std::size_t>(2 * n + 1);
    if (distinct.size() < cols) {
        throw std::invalid_argument("numeric_rank_independence: need at least 2n+1 distinct samples");
    }

    std::vector<FunctionRepr> basis;
    basis.push_back(FunctionRepr::one());
    for (int k = 1; k <= n; ++k) {
        basis.push_back(FunctionRepr::sinh(k));
        basis.push_back(FunctionRepr::cosh(k));
    }

    const std::size_t rows = distinct.size();
    std::vector<double> m(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        double scale = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            m[r * cols + c] = eval(basis[c], distinct[r]);
            scale = std::max(scale, std::fabs(m[r * cols + c]));
        }
        if (scale > 0.0) {
            for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] /= scale;
        }
    }

    constexpr double kPivotThreshold = 1e-8;
    std::vector<bool> used(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows;
        double best = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!used[r] && std::fabs(m[r * cols + c]) > best) {
                best = std::fabs(m[r * cols + c]);
                pivot = r;
            }
        }
        if (pivot == rows || best < kPivotThreshold) return false;
        used[pivot] = true;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r]) continue;
            const double f = m[r * cols + c] / m[pivot * cols + c];
            for (std::size_t j = c; j < cols; ++j) m[r * cols + j] -= f * m[pivot * cols + j];
        }
    }
    return true;
}

std::vector<double> equispaced(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    if (count == 0) return out;
    if (count == 1) return {lo};
    out.reserve(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + step * static_cast<double>(i));
    out.back() = hi;
    return out;
}

std::vector<double> default_samples() { return {-1.3, -0.7, -0.1, 0.1, 0.7, 1.3}; }

}  // namespace novikov
