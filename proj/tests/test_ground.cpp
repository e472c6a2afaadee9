#include <random>

#include "doctest.h"
#include "tlab/algebraic.hpp"
#include "tlab/factor.hpp"
#include "tlab/int_polynomial.hpp"

using namespace tlab;

TEST_CASE("factor small and structured inputs") {
    auto f = factor(Int(360));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Int, unsigned>{2, 3});
    CHECK(f.factors[1] == std::pair<Int, unsigned>{3, 2});
    CHECK(f.factors[2] == std::pair<Int, unsigned>{5, 1});

    CHECK(factor(Int(1)).factors.empty());

    auto g = factor(Int(2047));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == 23);
    CHECK(g.factors[1].first == 89);
}

TEST_CASE("factor recomposes on a random sample") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> dist(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        Int n(dist(rng));
        auto pf = factor(n);
        CHECK(pf.recompose() == n);
        for (size_t j = 0; j + 1 < pf.factors.size(); ++j)
            CHECK(pf.factors[j].first < pf.factors[j + 1].first);
        for (const auto& [p, e] : pf.factors) {
            CHECK(is_probable_prime(p));
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factor splits a 30-digit semiprime with small-ish factors") {
    Int a("1000000007");
    Int b("999999999989");
    auto pf = factor(a * b);
    REQUIRE(pf.factors.size() == 2);
    CHECK(pf.factors[0].first == a);
    CHECK(pf.factors[1].first == b);
}

TEST_CASE("factor_bounded reports hard cofactors instead of stalling") {
    // 2^137 - 1: smallest prime factor has 20 digits, far beyond a tiny
    // rho budget, so it must land in the remnant.
    Int m = pow_int(Int(2), 137) - 1;
    auto pf = factor_bounded(m, 1u << 10);
    CHECK(pf.recompose() == m);
    CHECK(!pf.complete());
}

TEST_CASE("arith_functions") {
    auto a = arith_functions(Int(12));
    CHECK(a.phi == 4);
    CHECK(a.divisor_count == 6);
    CHECK(a.omega == 2);
    CHECK(a.mobius == 0);

    auto b = arith_functions(Int(1));
    CHECK(b.phi == 1);
    CHECK(b.divisor_count == 1);
    CHECK(b.omega == 0);
    CHECK(b.mobius == 1);

    for (long p : {2L, 3L, 5L, 101L, 997L}) {
        auto c = arith_functions(Int(p));
        CHECK(c.phi == p - 1);
        CHECK(c.divisor_count == 2);
        CHECK(c.omega == 1);
        CHECK(c.mobius == -1);
    }
}

TEST_CASE("strip_primes") {
    auto [exps, cof] = strip_primes(Int(360), {Int(2), Int(5)});
    CHECK(exps == std::vector<long>{3, 1});
    CHECK(cof == 9);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(Int(2), 31) == 5);
    CHECK(multiplicative_order(Int(2), 7) == 3);
    CHECK(multiplicative_order(Int(10), 7) == 6);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
    CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(2) == IntPolynomial({1, 1}));

    for (unsigned long n = 1; n <= 300; ++n) {
        IntPolynomial prod({1});
        for (uint64_t d : divisors_u64(n)) prod = prod * cyclotomic(static_cast<unsigned long>(d));
        CHECK(prod == IntPolynomial::xn_minus_1(n));
        CHECK(cyclotomic(n).degree() == static_cast<long>(euler_phi_u64(n)));
        CHECK(cyclotomic(n).leading_coeff() == 1);
    }
}

TEST_CASE("cyclotomic_index recognizes exactly the cyclotomics") {
    for (unsigned long n : {1ul, 2ul, 3ul, 8ul, 12ul, 30ul, 105ul}) {
        auto idx = cyclotomic_index(cyclotomic(n));
        REQUIRE(idx.has_value());
        CHECK(*idx == n);
    }
    CHECK(!cyclotomic_index(IntPolynomial({-2, 1})).has_value());
    CHECK(!cyclotomic_index(IntPolynomial({-1, -2, 1})).has_value());
    CHECK(!cyclotomic_index(IntPolynomial({1, 3, 1})).has_value());
}

TEST_CASE("resultant fixed values") {
    IntPolynomial x_minus_2({-2, 1});
    CHECK(resultant(x_minus_2, cyclotomic(4)) == 5);
    CHECK(abs_int(resultant(cyclotomic(6), cyclotomic(3))) == 4);

    IntPolynomial f({1, -3, 0, 2, 5});
    IntPolynomial c({7});
    CHECK(resultant(f, c) == pow_int(Int(7), 4));
    CHECK_THROWS_AS(resultant(f, IntPolynomial{}), std::invalid_argument);
}

namespace {

// Brute-force oracle: Res(f,g) = lc(f)^deg g * prod over roots b of f of g(b).
Cplx resultant_bruteforce(const IntPolynomial& f, const IntPolynomial& g) {
    Cplx acc = Cplx(pow(to_real(f.leading_coeff()), static_cast<int>(g.degree())));
    for (const auto& r : complex_roots(f, Real("1e-30"))) {
        Cplx gz(0);
        for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
            gz = gz * r.value + Cplx(to_real(*it));
        for (int m = 0; m < r.multiplicity; ++m) acc *= gz;
    }
    return acc;
}

IntPolynomial random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> degd(1, maxdeg);
    std::uniform_int_distribution<int> cd(-9, 9);
    int d = degd(rng);
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = cd(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("resultant PRS equals brute-force root product") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 40) {
        IntPolynomial f = random_poly(rng, 8), g = random_poly(rng, 8);
        if (poly_gcd(f, g).degree() > 0) continue;  // oracle needs nonzero result
        Int r = resultant(f, g);
        Cplx o = resultant_bruteforce(f, g);
        Real scale = abs(o);
        if (scale < 1) scale = 1;
        CHECK(abs(Cplx(to_real(r)) - o) / scale < Real("1e-6"));
        ++done;
    }
}

TEST_CASE("resultant of cyclotomic pairs follows the prime-power law") {
    for (unsigned long m = 2; m <= 40; ++m) {
        for (unsigned long n = 1; n < m; ++n) {
            Int r = abs_int(resultant(cyclotomic(m), cyclotomic(n)));
            if (m % n == 0) {
                auto pf = factor(Int(static_cast<unsigned long>(m / n)));
                if (pf.factors.size() == 1) {
                    const Int& p = pf.factors[0].first;
                    CHECK(r == pow_int(p, euler_phi_u64(n)));
                    continue;
                }
            }
            CHECK(r == 1);
        }
    }
}

TEST_CASE("pseudo remainder and exact division") {
    IntPolynomial f({1, 2, 3, 4});
    IntPolynomial g({5, 6});
    auto pr = f.pseudo_remainder(g);
    CHECK(pr.degree() <= 0);
    IntPolynomial prod = f * g;
    CHECK(prod.divide_exact(g) == f);
    CHECK_THROWS(IntPolynomial({1, 1}).divide_exact(IntPolynomial({0, 3})));
}

TEST_CASE("poly_gcd and squarefree part") {
    IntPolynomial a({-1, 1});
    IntPolynomial b({1, 1});
    IntPolynomial f = a * a * b;
    CHECK(poly_gcd(f, f.derivative()) == a);
    CHECK(squarefree_part(f) == a * b);
}

TEST_CASE("complex_roots on x^2+1") {
    auto roots = complex_roots(IntPolynomial({1, 0, 1}), Real("1e-20"));
    REQUIRE(roots.size() == 2);
    CHECK(abs(roots[0].value - Cplx(0, -1)) < Real("1e-20"));
    CHECK(abs(roots[1].value - Cplx(0, 1)) < Real("1e-20"));
}

TEST_CASE("complex_roots of Phi_5 sit on the unit circle") {
    auto roots = complex_roots(cyclotomic(5), Real("1e-25"));
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) {
        CHECK(abs(abs(r.value) - 1) < Real("1e-25"));
        // match against some e^{2 pi i a / 5}
        bool matched = false;
        for (int a = 1; a < 5; ++a) {
            Real th = 2 * mp_pi() * a / 5;
            if (abs(r.value - Cplx(cos(th), sin(th))) < Real("1e-20")) matched = true;
        }
        CHECK(matched);
    }
}

TEST_CASE("complex_roots of x^3-2x^2-1") {
    auto roots = complex_roots(IntPolynomial({-1, 0, -2, 1}), Real("1e-25"));
    REQUIRE(roots.size() == 3);
    int reals = 0;
    for (const auto& r : roots)
        if (abs(r.value.imag()) < Real("1e-30")) {
            ++reals;
            CHECK(abs(r.value.real() - Real("2.20556943040059")) < Real("1e-8"));
        }
    CHECK(reals == 1);
}

TEST_CASE("complex_roots handles multiplicities") {
    IntPolynomial f = IntPolynomial({-1, 1}) * IntPolynomial({-1, 1}) *
                      IntPolynomial({3, 1}) * IntPolynomial({0, 1});
    auto roots = complex_roots(f, Real("1e-20"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].multiplicity == 1);  // -3
    CHECK(roots[1].multiplicity == 1);  // 0
    CHECK(roots[2].multiplicity == 2);  // 1 twice
}

TEST_CASE("naive height basics") {
    CHECK(abs(naive_height(AlgebraicNumber::from_rational(Rat(2))) - log(Real(2))) <
          Real("1e-40"));
    CHECK(abs(naive_height(AlgebraicNumber::from_rational(make_rat(1, 3))) -
              log(Real(3))) < Real("1e-40"));
    CHECK(naive_height(AlgebraicNumber::from_minpoly(cyclotomic(12), Cplx(0, 1))) == 0);
    CHECK_THROWS(naive_height(AlgebraicNumber::from_rational(Rat(0))));

    auto alpha = AlgebraicNumber::from_minpoly_real_root(IntPolynomial({-1, 0, -2, 1}));
    Real h = naive_height(alpha);
    // single root outside the unit circle: h = log(that root)/3
    Real expected = log(Real("2.205569430400590311617")) / 3;
    CHECK(abs(h - expected) < Real("1e-15"));
}
