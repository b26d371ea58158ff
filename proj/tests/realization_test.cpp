#include "novikov/realization.hpp"
#include "novikov/derivation.hpp"
#include "novikov/novikov.hpp"
#include "novikov/random.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace novikov;

namespace {

Element a(std::int64_t n, Rational c = Rational(1)) { return Element::basis(BasisSymbol::a(n), c); }
Element b(std::int64_t m, Rational c = Rational(1)) { return Element::basis(BasisSymbol::b(m), c); }
const Rational half(1, 2);

// Determinant by permutation expansion; only for tiny matrices.
mpz_class leibniz_det(const std::vector<mpz_class>& m, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        mpz_class prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m[i * n + perm[i]];
        total += (inversions % 2 ? -1 : 1) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Closed form of det[i^(2k-1)] = prod i * prod_{i<j} (j^2 - i^2), and the
// even system carries one more factor of prod i.
std::pair<mpz_class, mpz_class> vandermonde_closed_form(int n) {
    mpz_class diag = 1, vdm = 1;
    for (int i = 1; i <= n; ++i) {
        diag *= i;
        for (int j = i + 1; j <= n; ++j) vdm *= j * j - i * i;
    }
    return {diag * vdm, diag * diag * vdm};
}

}  // namespace

TEST_CASE("phi relabels basis symbols") {
    CHECK(phi(b(0)) == FunctionRepr::one());
    CHECK(phi(a(3)) == FunctionRepr::sinh(3));
    CHECK(phi(b(5, half) - b(1, half)) ==
          FunctionRepr::cosh(5, half) - FunctionRepr::cosh(1, half));
    CHECK(to_string(phi(b(5, half) - b(1, half))) == "1/2*cosh(5x) - 1/2*cosh(x)");
    CHECK(to_string(phi(a(2) - b(0, Rational(3)))) == "sinh(2x) - 3");
    CHECK_THROWS_AS(FunctionRepr::sinh(0), std::invalid_argument);
}

TEST_CASE("product-to-sum in T") {
    CHECK(t_mul(FunctionRepr::sinh(2), FunctionRepr::sinh(3)) ==
          FunctionRepr::cosh(5, half) - FunctionRepr::cosh(1, half));
    const FunctionRepr f = FunctionRepr::sinh(4, Rational(-2)) + FunctionRepr::cosh(1, half);
    CHECK(t_mul(FunctionRepr::one(), f) == f);
    CHECK(t_mul(FunctionRepr::cosh(1), FunctionRepr::cosh(1)) ==
          FunctionRepr::cosh(2, half) + FunctionRepr::cosh(0, half));
    CHECK(t_mul(FunctionRepr::sinh(1), FunctionRepr::cosh(3)) ==
          FunctionRepr::sinh(4, half) - FunctionRepr::sinh(2, half));
}

TEST_CASE("derivative in T") {
    CHECK(t_derivative(FunctionRepr::sinh(3)) == FunctionRepr::cosh(3, Rational(3)));
    CHECK(t_derivative(FunctionRepr::one()).is_zero());
    CHECK(t_derivative(FunctionRepr::cosh(5)) == FunctionRepr::sinh(5, Rational(5)));
}

TEST_CASE("numeric evaluation") {
    CHECK(eval(FunctionRepr::one(), 0.37) == 1.0);
    CHECK(eval(FunctionRepr::sinh(1), 0.0) == 0.0);
    const FunctionRepr f = FunctionRepr::cosh(5, half) - FunctionRepr::cosh(1, half);
    CHECK(eval(f, 0.1) == doctest::Approx(std::sinh(0.2) * std::sinh(0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(eval(FunctionRepr::sinh(31), 1.0), std::range_error);
    CHECK_NOTHROW(eval(FunctionRepr::sinh(30), -1.0));
}

TEST_CASE("phi is a structural isomorphism") {
    for (const auto& s : basis_up_to(6)) {
        for (const auto& t : basis_up_to(6)) {
            const Element u = Element::basis(s), v = Element::basis(t);
            CHECK(phi(mul(u, v)) == t_mul(phi(u), phi(v)));
        }
    }
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = trial_engine(17, trial);
        const Element u = random_element(rng, 8);
        const Element v = random_element(rng, 8);
        const Element p = random_element(rng, 8);
        CHECK(phi_inv(phi(u)) == u);
        CHECK(phi(mul(u, v)) == t_mul(phi(u), phi(v)));
        CHECK(phi(d0(u)) == t_derivative(phi(u)));
        CHECK(phi(circ(u, v, p)) == t_mul(t_mul(phi(u), phi(p)), t_derivative(phi(v))));
        // Pointwise check of the T product against std::sinh/cosh.
        for (double x : default_samples()) {
            const double lhs = eval(t_mul(phi(u), phi(v)), x);
            const double rhs = oracle::pointwise(u, x) * oracle::pointwise(v, x);
            CHECK(std::fabs(lhs - rhs) <= 1e-9 * (1.0 + std::fabs(rhs)));
        }
    }
}

TEST_CASE("vandermonde determinants") {
    const auto one = vandermonde_independence(1);
    CHECK(one.odd == 1);
    CHECK(one.even == 1);
    const auto two = vandermonde_independence(2);
    CHECK(two.odd == 6);
    CHECK(two.even == 12);
    for (int n = 1; n <= 8; ++n) {
        const auto d = vandermonde_independence(n);
        const auto [odd, even] = vandermonde_closed_form(n);
        CHECK(d.odd == odd);
        CHECK(d.even == even);
        CHECK(d.odd != 0);
        CHECK(d.even != 0);
    }
    CHECK_THROWS_AS(vandermonde_independence(0), std::invalid_argument);
}

TEST_CASE("bareiss agrees with permutation expansion") {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<mpz_class> m(n * n);
            for (auto& v : m) v = uniform_int(rng, -4, 4);
            CHECK(bareiss_determinant(m, n) == leibniz_det(m, n));
        }
    }
    // Zero leading pivot forces a row swap.
    CHECK(bareiss_determinant({0, 1, 1, 0}, 2) == -1);
    CHECK(bareiss_determinant({1, 2, 2, 4}, 2) == 0);
    CHECK(bareiss_determinant({}, 0) == 1);
}

TEST_CASE("numeric rank independence") {
    CHECK(numeric_rank_independence(1, std::vector<double>{-1.0, 0.0, 1.0}));
    CHECK(numeric_rank_independence(0, std::vector<double>{0.0}));
    CHECK(numeric_rank_independence(2, std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
    for (int n = 1; n <= 5; ++n) {
        CHECK(numeric_rank_independence(n, equispaced(-1.0, 1.0, 2 * n + 1)));
    }
    // Repeated samples do not count towards 2n+1.
    CHECK_THROWS_AS(numeric_rank_independence(1, std::vector<double>{0.0, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_rank_independence(2, std::vector<double>{-1.0, 0.0, 1.0}),
                    std::invalid_argument);
    // Nearly coincident samples leave the matrix numerically rank deficient.
    CHECK_FALSE(numeric_rank_independence(2, std::vector<double>{-1.0, 0.0, 1.0, 1.0 + 1e-13,
                                                                 -1.0 - 1e-13}));
}

TEST_CASE("equispaced grid") {
    const auto g = equispaced(-1.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == -1.0);
    CHECK(g[2] == doctest::Approx(0.0));
    CHECK(g.back() == 1.0);
}
