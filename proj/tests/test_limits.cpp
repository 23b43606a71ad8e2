#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "coxlimits/io.hpp"
#include "coxlimits/limit_roots.hpp"
#include "fixtures.hpp"

using namespace coxlimits;

namespace {

const Vec kA{1.0, 0.0};
const Vec kB{0.0, 1.0};

DihedralPair f1_pair() { return make_dihedral_pair(coxfix::f1(), kA, kB); }

bool cloud_has(const LimitCloud& cloud, const Vec& coords, double tol) {
    for (const auto& p : cloud.points)
        if (max_norm_distance(p.coords, coords) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("estimate_limit_cloud finds the two F1 limit points") {
    const auto d = coxfix::f1();
    const auto table = generate_positive_roots(d, 20);
    const auto cloud = estimate_limit_cloud(d, table, 15, 1e-4);
    REQUIRE(cloud.points.size() == 2);
    CHECK(cloud_has(cloud, {2.0 / 3.0, 1.0 / 3.0}, 1e-6));
    CHECK(cloud_has(cloud, {1.0 / 3.0, 2.0 / 3.0}, 1e-6));
    for (size_t k = 0; k < cloud.points.size(); ++k) {
        CHECK(cloud.residuals[k] == std::abs(isotropy(d, cloud.points[k].coords)));
        CHECK(cloud.provenance[k].kind == Provenance::Kind::DeepRoot);
    }
}

TEST_CASE("finite systems have nothing to accumulate") {
    const auto d = coxfix::finite_a2();
    const auto table = generate_positive_roots(d, 20);
    CHECK_THROWS_AS(estimate_limit_cloud(d, table, 15, 1e-4), EmptySelection);
}

TEST_CASE("F2 deep estimate keeps residuals small") {
    const auto d = coxfix::f2();
    const auto table = generate_positive_roots(d, 15);
    const auto cloud = estimate_limit_cloud(d, table, 12, 1e-2);
    CHECK(cloud.points.size() > 10);
    for (double r : cloud.residuals) CHECK(r <= 0.05);
}

TEST_CASE("line-cone intersections follow the trichotomy") {
    const auto d = coxfix::f1();
    const auto pts = line_isotropic_intersections(d, normalize(kA), normalize(kB));
    REQUIRE(pts.size() == 2);
    CHECK(max_norm_distance(pts[0].coords, {2.0 / 3.0, 1.0 / 3.0}) <= 1e-12);
    CHECK(max_norm_distance(pts[1].coords, {1.0 / 3.0, 2.0 / 3.0}) <= 1e-12);

    const auto f2 = coxfix::f2();
    const auto none = line_isotropic_intersections(f2, normalize(f2.simple_root(0)),
                                                   normalize(f2.simple_root(1)));
    CHECK(none.empty());  // |B| = 1/2 < 1

    const auto aff = coxfix::affine2();
    const auto single = line_isotropic_intersections(aff, normalize(kA), normalize(kB));
    REQUIRE(single.size() == 1);
    CHECK(max_norm_distance(single[0].coords, {0.5, 0.5}) <= 1e-12);

    CHECK_THROWS_AS(line_isotropic_intersections(d, normalize(kA), normalize(kA)),
                    IdenticalPoints);
}

TEST_CASE("dot action moves between the F1 limit points") {
    const auto d = coxfix::f1();
    const NormalizedPoint binf{{1.0 / 3.0, 2.0 / 3.0}};
    const NormalizedPoint ainf{{2.0 / 3.0, 1.0 / 3.0}};
    const auto to_a = dot_action(d, {0}, binf);
    CHECK(max_norm_distance(to_a.coords, ainf.coords) <= 1e-12);
    const auto to_b = dot_action(d, {0}, ainf);
    CHECK(max_norm_distance(to_b.coords, binf.coords) <= 1e-12);
    const auto same = dot_action(d, {}, ainf);
    CHECK(max_norm_distance(same.coords, ainf.coords) == 0.0);

    // single generators act as involutions on the chart
    const auto f2 = coxfix::f2();
    const auto table = generate_positive_roots(f2, 8);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& r = table[rng() % table.size()];
        const NormalizedPoint p = normalize(r.coords);
        const int s = static_cast<int>(rng() % 3);
        const auto back = dot_action(f2, {s}, dot_action(f2, {s}, p));
        CHECK(max_norm_distance(back.coords, p.coords) <= 1e-12);
    }
}

TEST_CASE("geometric action: fixed points and swap pairs") {
    const auto d = coxfix::f1();
    const NormalizedPoint ainf{{2.0 / 3.0, 1.0 / 3.0}};
    const auto check = verify_geometric_action(d, kA, ainf);
    CHECK_FALSE(check.fixed_point);
    CHECK(check.residual <= 1e-12);

    // orthogonal root: construct x on the cone with B(alpha, x) = 0 in F3
    const auto f3 = coxfix::f3();
    // solve for x = (0, u, v) isotropic with B(a1, x) = 0: -1.01(u+v) = 0 is
    // impossible, so take x in the plane orthogonal to a1 instead
    // B(a1, x) = x1 - 1.01(x2 + x3) = 0, B(x,x) = 0
    // pick x2 = 1, x3 = t: x1 = 1.01(1 + t)
    // B(x,x) = x1^2 + 1 + t^2 - 2.02(x1 + x1 t + t) = 0
    double lo = -0.5, hi = 0.0;
    auto eval = [&](double t) {
        const double x1 = 1.01 * (1.0 + t);
        const Vec x{x1, 1.0, t};
        return isotropy(f3, x);
    };
    REQUIRE(eval(lo) * eval(hi) < 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (eval(lo) * eval(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double x1 = 1.01 * (1.0 + lo);
    const auto x = normalize(Vec{x1, 1.0, lo});
    REQUIRE(std::abs(isotropy(f3, x.coords)) <= 1e-9);
    REQUIRE(std::abs(f3.bilinear(f3.simple_root(0), x.coords)) <= 1e-10);
    const auto fixed = verify_geometric_action(f3, f3.simple_root(0), x);
    CHECK(fixed.fixed_point);
    CHECK(fixed.residual <= 1e-9);

    CHECK_THROWS_AS(verify_geometric_action(d, kA, NormalizedPoint{{0.5, 0.5}}), NotIsotropic);
}

TEST_CASE("neighborhood certificates on F1") {
    const auto pair = f1_pair();
    const NormalizedPoint ainf = pair.a_inf;
    const NormalizedPoint binf = pair.b_inf;

    auto probe0 = make_neighborhood_probe(pair, 0);
    CHECK(certify_neighborhood(probe0, ainf));
    CHECK(probe0.certificate_margin == doctest::Approx(0.25).epsilon(1e-12));

    auto probe1 = make_neighborhood_probe(pair, 1);
    CHECK(certify_neighborhood(probe1, ainf));
    CHECK(probe1.certificate_margin == doctest::Approx(0.0625).epsilon(1e-9));
    CHECK(max_norm_distance(probe1.a_i, {5.25, 2.5}) == 0.0);

    CHECK_FALSE(certify_neighborhood(probe1, binf));
    CHECK(probe1.certificate_margin == doctest::Approx(-2.0).epsilon(1e-12));

    CHECK_THROWS_AS(certify_neighborhood(probe1, NormalizedPoint{{0.5, 0.5}}), NotIsotropic);

    // serialization of the probe report
    std::ostringstream os;
    write_neighborhood_json(os, probe1, {{ainf, 0.0625, true}, {binf, -2.0, false}});
    const std::string json = os.str();
    CHECK(json.find("\"i\":1") != std::string::npos);
    CHECK(json.find("\"certified\":true") != std::string::npos);
    CHECK(json.find("\"certified\":false") != std::string::npos);
}

TEST_CASE("neighborhood membership against the table") {
    const auto d = coxfix::f1();
    const auto pair = f1_pair();
    const auto table = generate_positive_roots(d, 20);
    CHECK(neighborhood_membership(pair, 2, table, pair.a_inf, 1e-6));
    CHECK_FALSE(neighborhood_membership(pair, 2, table, pair.b_inf, 1e-3));
    CHECK(neighborhood_membership(pair, 2, table, pair.b_inf, 2.0));  // ball covers the simplex

    const auto shallow = generate_positive_roots(d, 3);
    CHECK_THROWS_AS(neighborhood_membership(pair, 5, shallow, pair.a_inf, 1e-6),
                    BaseNotInTable);

    // nesting: membership at i+1 implies membership at i
    for (int i = 0; i <= 2; ++i) {
        for (const auto& eta : {pair.a_inf, pair.b_inf}) {
            if (neighborhood_membership(pair, i + 1, table, eta, 1e-4))
                CHECK(neighborhood_membership(pair, i, table, eta, 1e-4));
        }
    }
}

TEST_CASE("shrink witnesses separate everything but a_inf") {
    const auto pair = f1_pair();
    const auto w_b = shrink_witness(pair, pair.b_inf, 50);
    REQUIRE(w_b.has_value());
    CHECK(*w_b == 0);  // B(a, b_inf) = -0.5 < 0 already

    const auto w_a = shrink_witness(pair, pair.a_inf, 50);
    CHECK_FALSE(w_a.has_value());

    // margins stay positive and the false state is absorbing for cone points
    const auto d = coxfix::f2();
    const auto table = generate_positive_roots(d, 8);
    const auto e2 = sample_e2(d, table, 50, 3);
    const auto fpair = make_dihedral_pair(d, table[0].coords, Vec{1.0, 1.0, 0.0});
    for (const auto& eta : e2.points) {
        bool seen_false = false;
        for (int i = 0; i <= 30; ++i) {
            auto probe = make_neighborhood_probe(fpair, std::min(i, 20));
            const bool ok = certify_neighborhood(probe, eta);
            if (seen_false) CHECK_FALSE(ok);
            if (!ok) seen_false = true;
        }
    }
}

TEST_CASE("fundamental cone membership") {
    const auto d = coxfix::f1();
    CHECK(fundamental_cone_contains(d, {1.0, 1.0}));
    CHECK_FALSE(fundamental_cone_contains(d, kA));
    CHECK_FALSE(fundamental_cone_contains(d, {0.0, 0.0}));
    CHECK_FALSE(fundamental_cone_contains(d, {-0.5, 1.0}));

    // W-orbit points of the cone pair nonpositively against sampled limits
    const auto f2 = coxfix::f2();
    Vec center{1.0, 1.0, 1.0};
    REQUIRE(fundamental_cone_contains(f2, center));
    const auto table = generate_positive_roots(f2, 8);
    const auto e2 = sample_e2(f2, table, 50, 3);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> word;
        for (int l = 0; l < 4; ++l) word.push_back(static_cast<int>(rng() % 3));
        const Vec image = apply_word(f2, word, center);
        for (const auto& eta : e2.points)
            CHECK(f2.bilinear(image, eta.coords) <= 1e-8 * coord_sum(image));
    }
}

TEST_CASE("sample_e2 on F1 is exactly the two limit points") {
    const auto d = coxfix::f1();
    const auto table = generate_positive_roots(d, 10);
    const auto cloud = sample_e2(d, table, 200, 4);
    REQUIRE(cloud.points.size() == 2);
    CHECK(cloud_has(cloud, {2.0 / 3.0, 1.0 / 3.0}, 1e-9));
    CHECK(cloud_has(cloud, {1.0 / 3.0, 2.0 / 3.0}, 1e-9));
    for (double q : cloud.residuals) CHECK(q <= 1e-9);
}

TEST_CASE("sample_e2 refuses finite systems") {
    const auto d = coxfix::finite_a2();
    const auto table = generate_positive_roots(d, 10);
    CHECK_THROWS_AS(sample_e2(d, table, 10, 2), NoHyperbolicPairs);
}

TEST_CASE("sample_e2 on F2: isotropic, pairwise nonpositive, plentiful") {
    const auto d = coxfix::f2();
    const auto table = generate_positive_roots(d, 12);
    const auto cloud = sample_e2(d, table, 200, 4);
    CHECK(cloud.points.size() >= 50);
    for (double q : cloud.residuals) CHECK(q <= 1e-9);
    for (size_t i = 0; i < cloud.points.size(); ++i)
        for (size_t j = i + 1; j < cloud.points.size(); ++j)
            CHECK(d.bilinear(cloud.points[i].coords, cloud.points[j].coords) <= 1e-8);
}
