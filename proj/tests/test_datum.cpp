#include <doctest.h>

#include <cmath>
#include <random>

#include "coxlimits/datum.hpp"
#include "fixtures.hpp"

using namespace coxlimits;

TEST_CASE("gram parsing recognizes bonds and rejects bad entries") {
    const auto d1 = parse_gram_matrix("2\n1 -1.25\n-1.25 1\n");
    CHECK(d1.rank() == 2);
    CHECK(d1.bond(0, 1) == kInfinityBond);
    CHECK(d1.gram(0, 1) == doctest::Approx(-1.25));

    const auto d2 = parse_gram_matrix("2\n1 -0.5\n-0.5 1\n");
    CHECK(d2.bond(0, 1) == 3);  // -cos(pi/3) = -1/2

    CHECK_THROWS_AS(parse_gram_matrix("2\n1 -0.3\n-0.3 1\n"), InvalidDatum);
    CHECK_THROWS_AS(parse_gram_matrix("2\n1 0.4\n0.4 1\n"), InvalidDatum);
    CHECK_THROWS_AS(parse_gram_matrix("2\n1 -0.5\n-0.49 1\n"), InvalidDatum);  // asymmetric
    CHECK_THROWS_AS(parse_gram_matrix("2\n1.5 -0.5\n-0.5 1\n"), InvalidDatum);
    CHECK_THROWS_AS(parse_gram_matrix("2\n1 -0.5\n-0.5\n"), ParseError);
    CHECK_THROWS_AS(parse_gram_matrix("2\n1 oops\noops 1\n"), ParseError);
    CHECK_THROWS_AS(parse_gram_matrix(""), ParseError);

    // comments are ignored
    const auto d3 = parse_gram_matrix("# rank two\n2\n1 -1.25\n-1.25 1\n");
    CHECK(d3.gram(1, 0) == doctest::Approx(-1.25));
}

TEST_CASE("coxeter parsing applies the infinity bond and overrides") {
    const auto f1 = parse_coxeter_matrix("2\n1 0\n0 1\n", -1.25);
    CHECK(f1.gram(0, 1) == doctest::Approx(-1.25));
    CHECK(f1.bond(0, 1) == kInfinityBond);

    const auto t = parse_coxeter_matrix("3\n1 3 4\n3 1 3\n4 3 1\n", -1.0);
    CHECK(t.gram(0, 1) == doctest::Approx(-0.5));
    CHECK(t.gram(1, 2) == doctest::Approx(-0.5));
    CHECK(t.gram(0, 2) == doctest::Approx(-std::sqrt(2.0) / 2.0));

    CHECK_THROWS_AS(parse_coxeter_matrix("2\n1 1\n1 1\n", -1.0), InvalidDatum);
    CHECK_THROWS_AS(parse_coxeter_matrix("2\n1 0\n0 1\n", -0.5), InvalidDatum);
    CHECK_THROWS_AS(parse_coxeter_matrix("2\n1 0\n0 1\n", -1.0, {{1, 2, -0.5}}), InvalidDatum);
    CHECK_THROWS_AS(parse_coxeter_matrix("2\n1 3\n3 1\n", -1.0, {{1, 2, -2.0}}), InvalidDatum);

    const auto ov = parse_coxeter_matrix("2\n1 0\n0 1\n", -1.0, {{1, 2, -1.5}});
    CHECK(ov.gram(0, 1) == doctest::Approx(-1.5));
    CHECK(ov.gram(1, 0) == doctest::Approx(-1.5));

    const auto parsed = parse_overrides("1 2 -1.5\n# comment\n");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].value == doctest::Approx(-1.5));
}

TEST_CASE("bilinear form values on F1") {
    const auto d = coxfix::f1();
    const Vec a{1.0, 0.0}, b{0.0, 1.0}, ones{1.0, 1.0};
    CHECK(d.bilinear(a, a) == doctest::Approx(1.0));
    CHECK(d.bilinear(a, b) == doctest::Approx(-1.25));
    CHECK(d.bilinear(ones, ones) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(d.bilinear(Vec{1.0, 2.0, 3.0}, a), DimensionMismatch);
}

TEST_CASE("simple reflections on F1") {
    const auto d = coxfix::f1();
    const Vec a{1.0, 0.0}, b{0.0, 1.0};
    const Vec ra_a = d.reflect(0, a);
    CHECK(ra_a[0] == doctest::Approx(-1.0));
    CHECK(ra_a[1] == doctest::Approx(0.0));
    const Vec ra_b = d.reflect(0, b);
    CHECK(ra_b[0] == doctest::Approx(2.5));
    CHECK(ra_b[1] == doctest::Approx(1.0));
    const Vec twice = d.reflect(0, ra_b);
    CHECK(twice[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(twice[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(d.reflect(2, a), IndexOutOfRange);
    CHECK_THROWS_AS(d.reflect(-1, a), IndexOutOfRange);
}

TEST_CASE("bond classification trichotomy") {
    const auto f1 = coxfix::f1();
    CHECK(f1.classify_bond(0, 1).kind == BondKind::Hyperbolic);

    const auto aff = coxfix::affine2();
    CHECK(aff.classify_bond(0, 1).kind == BondKind::Affine);

    const auto a2 = coxfix::finite_a2();
    const auto cls = a2.classify_bond(0, 1);
    CHECK(cls.kind == BondKind::Finite);
    CHECK(cls.order == 3);

    CHECK_THROWS_AS(f1.classify_bond(0, 0), IndexOutOfRange);
}

TEST_CASE("form properties: linearity, involution, invariance") {
    const auto d = coxfix::f3();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    auto rand_vec = [&] {
        Vec v(3);
        for (double& c : v) c = coef(rng);
        return v;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Vec u = rand_vec(), v = rand_vec(), w = rand_vec();
        const double lam = coef(rng), mu = coef(rng);
        Vec combo(3);
        for (int k = 0; k < 3; ++k) combo[k] = lam * u[k] + mu * v[k];
        const double lhs = d.bilinear(combo, w);
        const double rhs = lam * d.bilinear(u, w) + mu * d.bilinear(v, w);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

        const int s = static_cast<int>(rng() % 3);
        const Vec ru = d.reflect(s, u), rv = d.reflect(s, v);
        CHECK(d.bilinear(ru, rv) == doctest::Approx(d.bilinear(u, v)).epsilon(1e-9));
        const Vec uu = d.reflect(s, ru);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(uu[k] - u[k]) <= 1e-12);
    }
}
