#include "coxlimits/limit_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxlimits {

namespace {

constexpr double kIsotropicProbeTol = 1e-6;   // certify/membership input gate
constexpr double kIsotropicStrictTol = 1e-9;  // verify_geometric_action input gate
constexpr double kFixedPointTol = 1e-10;
constexpr double kChartTol = 1e-14;
constexpr double kCloudResidualTol = 1e-9;

std::string word_to_string(const std::vector<int>& word) {
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += '-';
        s += std::to_string(word[k] + 1);
    }
    return s;
}

void append_clustered(LimitCloud& cloud, const NormalizedPoint& pt, double residual,
                      Provenance prov) {
    for (const auto& existing : cloud.points) {
        if (max_norm_distance(existing.coords, pt.coords) < cloud.cluster_tol) return;
    }
    cloud.points.push_back(pt);
    cloud.residuals.push_back(residual);
    cloud.provenance.push_back(std::move(prov));
}

// B(a_i, eta) through the contraction split; see the header note. With the
// second coefficient snapped to zero this reduces to e^{-2 i theta} B(a,eta)
// for the pair's own limit point.
double probe_margin(const DihedralPair& pair, int i, const Vec& eta) {
    const double p = pair.datum.bilinear(pair.a, eta);
    const double q = pair.datum.bilinear(pair.b, eta);
    double r = std::exp(pair.theta) * p + q;  // proportional to B(a_inf direction, eta)
    if (std::abs(r) <= 1e-12 * std::max({1.0, std::abs(p), std::abs(q)})) r = 0.0;
    const double decay = std::exp(-2.0 * static_cast<double>(i) * pair.theta);
    double margin = decay * p;
    if (r != 0.0) {
        const double c2i = chebyshev_c(pair.theta, 2 * i);
        if (std::isinf(c2i)) return r > 0.0 ? 1e300 : -1e300;
        margin += c2i * r;
    }
    return margin;
}

}  // namespace

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::DeepRoot:
            return "deep_root(" + std::to_string(depth) + ")";
        case Kind::DihedralPair:
            return "dihedral_pair(" + std::to_string(pair_i) + "," + std::to_string(pair_j) + ")";
        case Kind::Orbit:
            return "orbit(" + word_to_string(word) + "," + base + ")";
    }
    return "?";
}

LimitCloud estimate_limit_cloud(const CoxeterDatum& datum, const RootTable& table,
                                int min_depth, double cluster_tol) {
    LimitCloud cloud;
    cloud.cluster_tol = cluster_tol;
    bool any = false;
    for (const Root& r : table.roots()) {
        if (r.depth < min_depth) continue;
        any = true;
        const NormalizedPoint pt = normalize(r.coords);
        Provenance prov;
        prov.kind = Provenance::Kind::DeepRoot;
        prov.depth = r.depth;
        append_clustered(cloud, pt, std::abs(isotropy(datum, pt.coords)), std::move(prov));
    }
    if (!any) throw EmptySelection("no table roots at or beyond min_depth");
    return cloud;
}

std::vector<NormalizedPoint> line_isotropic_intersections(const CoxeterDatum& datum,
                                                          const NormalizedPoint& p,
                                                          const NormalizedPoint& q) {
    if (max_norm_distance(p.coords, q.coords) <= 1e-12)
        throw IdenticalPoints("line through a point requires two distinct points");

    Vec d(p.coords.size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = q.coords[k] - p.coords[k];
    const double a = datum.bilinear(d, d);
    const double b = 2.0 * datum.bilinear(p.coords, d);
    const double c = datum.bilinear(p.coords, p.coords);

    auto point_at = [&](double t) {
        Vec v(d.size());
        for (size_t k = 0; k < d.size(); ++k) v[k] = p.coords[k] + t * d[k];
        return normalize(v);
    };

    std::vector<double> ts;
    const double qp = c;
    const double qq = datum.bilinear(q.coords, q.coords);
    const double bpq = datum.bilinear(p.coords, q.coords);
    if (qp > 0.0 && qq > 0.0) {
        // Both endpoints off the cone on the positive side: classify by the
        // scale-free pairing, which equals B(x, y) for unit-root inputs.
        const double g = std::abs(bpq) / std::sqrt(qp * qq);
        if (g < 1.0 - 1e-9) return {};
        if (g <= 1.0 + 1e-9) {
            if (std::abs(a) > 1e-14) ts.push_back(-b / (2.0 * a));
            else if (std::abs(b) > 1e-14) ts.push_back(-c / b);
            else return {};  // tangent at infinity: the affine line misses the cone
        }
    }
    if (ts.empty()) {
        if (std::abs(a) <= 1e-14 * std::max({1.0, std::abs(b), std::abs(c)})) {
            if (std::abs(b) > 1e-300) ts.push_back(-c / b);
        } else {
            const double disc = b * b - 4.0 * a * c;
            const double scale = std::max({b * b, std::abs(4.0 * a * c), 1e-300});
            if (disc < -1e-12 * scale) return {};
            if (disc <= 1e-12 * scale) {
                ts.push_back(-b / (2.0 * a));
            } else {
                const double rt = std::sqrt(disc);
                ts.push_back((-b - rt) / (2.0 * a));
                ts.push_back((-b + rt) / (2.0 * a));
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    std::vector<NormalizedPoint> out;
    for (double t : ts) out.push_back(point_at(t));
    return out;
}

NormalizedPoint dot_action(const CoxeterDatum& datum, const std::vector<int>& word,
                           const NormalizedPoint& p) {
    Vec v = p.coords;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        datum.reflect_in_place(*it, v);
        const double s = coord_sum(v);
        if (std::abs(s) <= kChartTol)
            throw LeavesChartD("image crossed the zero-sum hyperplane");
        for (double& c : v) c /= s;
    }
    return {v};
}

GeometricActionCheck verify_geometric_action(const CoxeterDatum& datum, const Vec& alpha,
                                             const NormalizedPoint& x) {
    if (std::abs(isotropy(datum, x.coords)) > kIsotropicStrictTol)
        throw NotIsotropic("geometric action check requires a point on the cone");

    const double pairing = datum.bilinear(alpha, x.coords);
    GeometricActionCheck check;

    Vec reflected = x.coords;
    const double unit = datum.bilinear(alpha, alpha);
    for (size_t k = 0; k < reflected.size(); ++k)
        reflected[k] -= 2.0 * (pairing / unit) * alpha[k];
    const NormalizedPoint image = normalize(reflected);

    if (std::abs(pairing) <= kFixedPointTol) {
        check.fixed_point = true;
        check.residual = max_norm_distance(image.coords, x.coords);
        return check;
    }

    const NormalizedPoint alpha_hat = normalize(alpha);
    const auto pts = line_isotropic_intersections(datum, alpha_hat, x);
    if (pts.size() != 2) {
        check.residual = std::numeric_limits<double>::infinity();
        return check;
    }
    // {x, r_alpha . x} must match the intersection pair as a set.
    const double direct = std::max(max_norm_distance(pts[0].coords, x.coords),
                                   max_norm_distance(pts[1].coords, image.coords));
    const double crossed = std::max(max_norm_distance(pts[1].coords, x.coords),
                                    max_norm_distance(pts[0].coords, image.coords));
    check.residual = std::min(direct, crossed);
    return check;
}

NeighborhoodProbe make_neighborhood_probe(const DihedralPair& pair, int i) {
    if (pair.kind == DihedralKind::Affine)
        throw AffinePair("neighborhood probes require a hyperbolic pair");
    if (i < 0) throw IndexOutOfRange("probe index must be nonnegative");
    NeighborhoodProbe probe;
    probe.pair = pair;
    probe.index = i;
    probe.a_i = sequence_root(pair, i, DihedralSide::A);
    return probe;
}

bool certify_neighborhood(NeighborhoodProbe& probe, const NormalizedPoint& eta) {
    if (std::abs(isotropy(probe.pair.datum, eta.coords)) > kIsotropicProbeTol)
        throw NotIsotropic("certificate point must lie on the cone");
    probe.certificate_margin = probe_margin(probe.pair, probe.index, eta.coords);
    return probe.certificate_margin > 0.0;
}

bool neighborhood_membership(const DihedralPair& pair, int i, const RootTable& table,
                             const NormalizedPoint& eta, double eps) {
    if (std::abs(isotropy(pair.datum, eta.coords)) > kIsotropicProbeTol)
        throw NotIsotropic("membership point must lie on the cone");
    const Vec a_i = sequence_root(pair, i, DihedralSide::A);
    const auto base_index = table.find(a_i);
    if (!base_index) throw BaseNotInTable("a_i is not in the table; deepen the table");
    const auto cone = dominance_cone(pair.datum, table[*base_index], table);
    for (const Root& r : cone) {
        if (max_norm_distance(normalize(r.coords).coords, eta.coords) <= eps) return true;
    }
    return false;
}

std::optional<int> shrink_witness(const DihedralPair& pair, const NormalizedPoint& eta,
                                  int i_max) {
    for (int i = 0; i <= i_max; ++i) {
        if (probe_margin(pair, i, eta.coords) <= 0.0) return i;
    }
    return std::nullopt;
}

bool fundamental_cone_contains(const CoxeterDatum& datum, const Vec& v) {
    if (v.size() != static_cast<size_t>(datum.rank()))
        throw DimensionMismatch("vector length does not match datum rank");
    bool nonzero = false;
    for (double c : v) {
        if (c < -1e-12) return false;
        if (c > 1e-12) nonzero = true;
    }
    if (!nonzero) return false;
    for (int s = 0; s < datum.rank(); ++s) {
        double pairing = 0.0;
        for (int j = 0; j < datum.rank(); ++j) pairing += datum.gram(s, j) * v[static_cast<size_t>(j)];
        if (pairing > 1e-12) return false;
    }
    return true;
}

LimitCloud sample_e2(const CoxeterDatum& datum, const RootTable& table, int pair_budget,
                     int word_budget, double cluster_tol) {
    if (pair_budget < 1 || word_budget < 1)
        throw IndexOutOfRange("sample_e2 budgets must be >= 1");

    // One candidate pair per table root: the root with its first strictly
    // hyperbolic partner among the simple roots, falling back to the first
    // few table roots. Deep roots then contribute limit points glued to
    // their own normalized positions.
    constexpr double kHyperbolic = -1.0 - 1e-12;
    const auto& roots = table.roots();
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    const std::size_t partner_scan = std::min<std::size_t>(roots.size(), 64);
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        std::optional<std::size_t> partner;
        for (int s = 0; s < datum.rank() && !partner; ++s) {
            const Vec e = datum.simple_root(s);
            if (datum.bilinear(roots[idx].coords, e) < kHyperbolic) partner = table.find(e);
        }
        for (std::size_t j = 0; j < partner_scan && !partner; ++j) {
            if (j != idx && datum.bilinear(roots[idx].coords, roots[j].coords) < kHyperbolic)
                partner = j;
        }
        if (partner) candidates.emplace_back(idx, *partner);
    }
    if (candidates.empty()) {
        for (std::size_t i = 0; i < roots.size() && candidates.empty(); ++i)
            for (std::size_t j = i + 1; j < roots.size() && candidates.empty(); ++j)
                if (datum.bilinear(roots[i].coords, roots[j].coords) < kHyperbolic)
                    candidates.emplace_back(i, j);
    }
    if (candidates.empty())
        throw NoHyperbolicPairs("the table contains no strictly hyperbolic root pair");

    // Even stride through the candidate list, first and last included.
    std::vector<std::pair<std::size_t, std::size_t>> selected;
    const std::size_t budget = static_cast<std::size_t>(pair_budget);
    if (candidates.size() <= budget) {
        selected = candidates;
    } else {
        std::size_t prev = candidates.size();
        for (std::size_t t = 0; t < budget; ++t) {
            const std::size_t pick =
                budget == 1 ? 0
                            : (t * (candidates.size() - 1) + (budget - 1) / 2) / (budget - 1);
            if (pick != prev) selected.push_back(candidates[pick]);
            prev = pick;
        }
    }

    LimitCloud cloud;
    cloud.cluster_tol = cluster_tol;
    std::optional<NormalizedPoint> orbit_base;
    for (const auto& [i, j] : selected) {
        const auto pair = make_dihedral_pair(datum, roots[i].coords, roots[j].coords);
        Provenance prov;
        prov.kind = Provenance::Kind::DihedralPair;
        prov.pair_i = static_cast<int>(i);
        prov.pair_j = static_cast<int>(j);
        const double qa = std::abs(isotropy(datum, pair.a_inf.coords));
        const double qb = std::abs(isotropy(datum, pair.b_inf.coords));
        if (qa <= kCloudResidualTol) append_clustered(cloud, pair.a_inf, qa, prov);
        if (qb <= kCloudResidualTol) append_clustered(cloud, pair.b_inf, qb, prov);
        if (!orbit_base) orbit_base = pair.a_inf;
    }

    // Orbit of the first a_inf under short words (no immediate repeats).
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= word_budget; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words) {
            if (static_cast<int>(w.size()) != len - 1) continue;
            for (int s = 0; s < datum.rank(); ++s) {
                if (!w.empty() && w.front() == s) continue;
                std::vector<int> ext;
                ext.push_back(s);
                ext.insert(ext.end(), w.begin(), w.end());
                next.push_back(ext);
            }
        }
        for (auto& w : next) {
            try {
                const NormalizedPoint image = dot_action(datum, w, *orbit_base);
                const double q = std::abs(isotropy(datum, image.coords));
                if (q <= kCloudResidualTol) {
                    Provenance prov;
                    prov.kind = Provenance::Kind::Orbit;
                    prov.word = w;
                    prov.base = "a_inf";
                    append_clustered(cloud, image, q, std::move(prov));
                }
            } catch (const LeavesChartD&) {
                // orbit point fell off the chart; skip it
            }
            words.push_back(std::move(w));
        }
    }
    return cloud;
}

}  // namespace coxlimits
