#include "doctest.h"
#include "tlab/mulgroup.hpp"

using namespace tlab;
using namespace tlab::mulgroup;

namespace {
AlgebraicNumber alpha_two() { return AlgebraicNumber::from_rational(Rat(2)); }
}

TEST_CASE("s_integral_scan for alpha = 2 with S = {infinity}") {
    PlaceSet S;
    auto verdicts = s_integral_scan(alpha_two(), S, 1, 6);
    REQUIRE(verdicts.size() == 6);
    CHECK(verdicts[0].integral);        // Res(x-2, Phi_1) = 1
    CHECK(verdicts[0].collisions.empty());
    CHECK(!verdicts[4].integral);       // n = 5: Phi_5(2) = 31
    REQUIRE(verdicts[4].collisions.size() == 1);
    CHECK(verdicts[4].collisions[0].prime == 31);
    CHECK(verdicts[4].collisions[0].witness_degree >= 1);
}

TEST_CASE("s_integral_scan rejects roots of unity") {
    auto zeta3 = AlgebraicNumber::from_minpoly(cyclotomic(3), Cplx(Real("-0.5"), 1));
    PlaceSet S;
    CHECK_THROWS_AS(s_integral_scan(zeta3, S, 1, 3), std::invalid_argument);
}

TEST_CASE("Example A: Res(Phi_3, Phi_2) = 1, so zeta_3 vs zeta_2 never collide") {
    CHECK(abs_int(resultant(cyclotomic(3), cyclotomic(2))) == 1);
}

TEST_CASE("s_integral_scan stabilizes for alpha = 2, S = {2,3,7}") {
    PlaceSet S({Int(2), Int(3), Int(7)});
    auto verdicts = s_integral_scan(alpha_two(), S, 1, 60);
    std::vector<unsigned long> integral;
    for (const auto& v : verdicts)
        if (v.integral) integral.push_back(v.n);
    CHECK(integral == std::vector<unsigned long>{1, 2, 3, 6});
}

TEST_CASE("place_decomposition examples") {
    auto d5 = place_decomposition(Rat(2), 5);
    CHECK(d5.arch_magnitude == Rat(31));
    REQUIRE(d5.finite_ords.size() == 1);
    CHECK(d5.finite_ords[0] == std::pair<Int, long>{31, 1});
    CHECK(d5.total_exactly_zero);

    auto d1 = place_decomposition(Rat(2), 1);
    CHECK(d1.arch_magnitude == Rat(1));
    CHECK(d1.finite_ords.empty());
    CHECK(d1.total_exactly_zero);

    auto dh = place_decomposition(make_rat(1, 2), 3);
    CHECK(dh.arch_magnitude == make_rat(7, 4));
    REQUIRE(dh.finite_ords.size() == 2);
    CHECK(dh.finite_ords[0] == std::pair<Int, long>{2, -2});
    CHECK(dh.finite_ords[1] == std::pair<Int, long>{7, 1});
    CHECK(dh.total_exactly_zero);

    CHECK_THROWS_AS(place_decomposition(Rat(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(place_decomposition(Rat(0), 4), std::invalid_argument);
}

TEST_CASE("place_decomposition total is exactly zero across alphas and n") {
    for (const Rat& a : {Rat(2), Rat(3), make_rat(1, 2), make_rat(-5, 3)})
        for (unsigned long n = 1; n <= 40; ++n)
            CHECK(place_decomposition(a, n).total_exactly_zero);
}

TEST_CASE("local_average_series archimedean for alpha = 2") {
    auto entries = local_average_series(Rat(2), Place::arch(), {100});
    REQUIRE(entries.size() == 1);
    CHECK(abs(entries[0].value - log(Real(2))) < Real("0.2"));
    CHECK(entries[0].limit_target == log(Real(2)));
}

TEST_CASE("local_average_series at p = 7 vanishes off the order-3 pattern") {
    // ord of 2 mod 7 is 3: collisions only at multiples of 3
    auto entries = local_average_series(Rat(2), Place::finite(Int(7)),
                                        {1, 2, 4, 5, 7, 8, 10, 100});
    for (const auto& e : entries) {
        CHECK(e.value == 0);
        CHECK(e.limit_target == 0);
        CHECK(e.exact_match);
    }
}

TEST_CASE("local_average_series exact ultrametric match when |alpha|_v != 1") {
    auto entries = local_average_series(make_rat(1, 2), Place::finite(Int(2)),
                                        {1, 2, 3, 4, 5, 10, 31});
    for (const auto& e : entries) {
        CHECK(e.exact_match);
        CHECK(abs(e.value - log(Real(2))) < Real("1e-45"));
        CHECK(e.limit_target == log(Real(2)));
    }
}

TEST_CASE("everest_ward for x - 2") {
    auto rep = everest_ward(IntPolynomial({-2, 1}), 64);
    REQUIRE(rep.delta.size() == 64);
    for (unsigned long n = 1; n <= 64; ++n)
        CHECK(rep.delta[n - 1] == pow_int(Int(2), n) - 1);
    CHECK(rep.normalized[0] == 0);  // log 1
    CHECK(abs(rep.mahler - log(Real(2))) < Real("1e-30"));
}

TEST_CASE("everest_ward Lucas pattern for x^2 - x - 1") {
    auto rep = everest_ward(IntPolynomial({-1, -1, 1}), 5);
    CHECK(rep.delta == std::vector<Int>{1, 1, 4, 5, 11});
    Real golden = (1 + sqrt(Real(5))) / 2;
    CHECK(abs(rep.mahler - log(golden)) < Real("1e-30"));
}

TEST_CASE("everest_ward rejects excluded inputs") {
    CHECK_THROWS_AS(everest_ward(IntPolynomial({0, 1}), 5), std::invalid_argument);
    CHECK_THROWS_AS(everest_ward(cyclotomic(4), 5), std::invalid_argument);
    CHECK_THROWS_AS(everest_ward(IntPolynomial({-1, 2}), 5), std::invalid_argument);
}

TEST_CASE("cyclotomic_unit_scan") {
    CHECK(cyclotomic_unit_scan(alpha_two(), 100) == std::vector<unsigned long>{1});

    auto unit = AlgebraicNumber::from_minpoly_real_root(IntPolynomial({-1, 0, -2, 1}));
    auto ms = cyclotomic_unit_scan(unit, 30);
    for (auto m : ms) CHECK(m != 1);  // |f(1)| = 2

    auto three = AlgebraicNumber::from_rational(Rat(3));
    auto m3 = cyclotomic_unit_scan(three, 50);
    CHECK(m3.empty());  // Phi_m(3) > 1 for every m

    CHECK_THROWS_AS(cyclotomic_unit_scan(AlgebraicNumber::from_rational(make_rat(1, 2)), 10),
                    std::invalid_argument);
}

TEST_CASE("small_point_family units and heights") {
    auto fam = small_point_family(4);
    REQUIRE(fam.size() == 4);
    CHECK(fam[0].f == IntPolynomial({-1, 0, -2, 1}));
    CHECK(fam[0].unit_at_0 == 1);
    CHECK(fam[0].unit_at_2 == 1);
    CHECK(fam[1].f == IntPolynomial({-1, 0, 0, 0, -2, 1}));
    for (const auto& m : fam) {
        CHECK(m.unit_at_0 == 1);
        CHECK(m.unit_at_2 == 1);
        CHECK(m.certificate.rfind("irreducible mod", 0) == 0);
        CHECK(m.height > 0);
    }
    CHECK(fam[2].height < fam[0].height);  // h(beta_3) < h(beta_1)
    CHECK(fam[3].height < fam[1].height);
}

TEST_CASE("Bang property: primitive prime divisors for alpha = 2") {
    // For 7 <= n <= 60 the collision list must witness a prime p with p
    // not dividing n and ord_p(2) = n exactly.
    PlaceSet S;
    auto verdicts = s_integral_scan(alpha_two(), S, 7, 60);
    for (const auto& v : verdicts) {
        bool witnessed = false;
        for (const auto& c : v.collisions) {
            if (c.prime > Int("10000000000000")) continue;  // keep the order check cheap
            uint64_t p = mpz_get_ui(c.prime.get_mpz_t());
            if (v.n % p == 0) continue;
            if (multiplicative_order(Int(2), p) == v.n) witnessed = true;
        }
        // Large primitive primes may hide in the unfactored cofactor; the
        // structural guarantee is cofactor > 1 after removing intrinsic
        // primes. At this range everything factors, so demand the witness.
        CHECK(witnessed);
    }
}

TEST_CASE("Lemma 1 uniqueness: each small prime collides for at most one n coprime to it") {
    // p with |2|_p = 1: collisions with zeta_n at p (p coprime to n) happen
    // exactly at n = ord_p(2).
    for (uint64_t p : {3ull, 5ull, 11ull, 13ull, 31ull, 41ull, 97ull}) {
        uint64_t hits = 0;
        for (unsigned long n = 1; n <= 500; ++n) {
            if (n % p == 0) continue;
            // evaluate Phi_n(2) mod p via exact poly reduction
            if (cyclotomic(n).evaluate(Int(2)) % Int(static_cast<unsigned long>(p)) == 0)
                ++hits;
        }
        CHECK(hits <= 1);
        if (multiplicative_order(Int(2), p) <= 500) CHECK(hits == 1);
    }
}
