#include "coxlimits/dihedral.hpp"

#include <cmath>

namespace coxlimits {

namespace {

constexpr double kAffineTol = 1e-12;
constexpr double kCollinearTol = 1e-10;
constexpr double kSeedTol = 1e-12;
constexpr double kConvergenceTol = 1e-12;
constexpr int kIterationCap = 200;

Vec unit_root(const CoxeterDatum& datum, Vec v) {
    const double q = datum.bilinear(v, v);
    if (!(q > 0.0)) throw NotInfiniteDihedral("pair members must have positive B-norm");
    const double scale = 1.0 / std::sqrt(q);
    for (double& c : v) c *= scale;
    return v;
}

Vec rotate(const DihedralPair& pair, Vec v) {
    // r_a r_b applied as reflections in the (non-simple) roots a and b.
    const double pb = pair.datum.bilinear(v, pair.b);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= 2.0 * pb * pair.b[k];
    const double pa = pair.datum.bilinear(v, pair.a);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= 2.0 * pa * pair.a[k];
    return v;
}

}  // namespace

DihedralPair make_dihedral_pair(const CoxeterDatum& datum, Vec a, Vec b) {
    DihedralPair pair;
    pair.datum = datum;
    pair.a = unit_root(datum, std::move(a));
    pair.b = unit_root(datum, std::move(b));
    pair.b_ab = datum.bilinear(pair.a, pair.b);
    if (pair.b_ab > -1.0 + kAffineTol)
        throw NotInfiniteDihedral("B(a,b) must be <= -1 for an infinite dihedral pair");
    pair.norm_a = coord_sum(pair.a);
    pair.norm_b = coord_sum(pair.b);

    const int n = datum.rank();
    Vec u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    if (pair.b_ab < -1.0 - kAffineTol) {
        pair.kind = DihedralKind::Hyperbolic;
        const double x = -pair.b_ab;
        pair.theta = std::log(x + std::sqrt(x * x - 1.0));  // arcosh, stable for x > 1
        const double grow = std::exp(pair.theta);           // cosh + sinh
        const double shrink = std::exp(-pair.theta);        // cosh - sinh
        for (int k = 0; k < n; ++k) {
            u[static_cast<size_t>(k)] = grow * pair.a[static_cast<size_t>(k)] + pair.b[static_cast<size_t>(k)];
            v[static_cast<size_t>(k)] = shrink * pair.a[static_cast<size_t>(k)] + pair.b[static_cast<size_t>(k)];
        }
        pair.a_inf = normalize(u);
        pair.b_inf = normalize(v);
    } else {
        pair.kind = DihedralKind::Affine;
        pair.theta = 0.0;
        // Isotropic direction of the affine pair: B(ua + vb) = (u - v)^2
        // forces u = v.
        for (int k = 0; k < n; ++k)
            u[static_cast<size_t>(k)] = pair.a[static_cast<size_t>(k)] + pair.b[static_cast<size_t>(k)];
        pair.a_inf = normalize(u);
        pair.b_inf = pair.a_inf;
    }
    return pair;
}

double chebyshev_c(double theta, int i) {
    if (i < 0) throw IndexOutOfRange("chebyshev_c index must be nonnegative");
    if (i == 0) return 0.0;
    const double twocosh = 2.0 * std::cosh(theta);
    double prev = 0.0, cur = 1.0;
    for (int k = 1; k < i; ++k) {
        const double next = twocosh * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Vec sequence_root(const DihedralPair& pair, int i, DihedralSide side) {
    if (pair.kind == DihedralKind::Affine)
        throw AffinePair("root sequences require a hyperbolic pair");
    if (i < 0) throw IndexOutOfRange("sequence index must be nonnegative");
    const double c_even = chebyshev_c(pair.theta, 2 * i);
    const double c_odd = chebyshev_c(pair.theta, 2 * i + 1);
    const double ca = side == DihedralSide::A ? c_odd : c_even;
    const double cb = side == DihedralSide::A ? c_even : c_odd;
    Vec out(pair.a.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = ca * pair.a[k] + cb * pair.b[k];
    return out;
}

Mat2 rotation_matrix_power(const DihedralPair& pair, int i) {
    if (pair.kind == DihedralKind::Affine)
        throw AffinePair("rotation powers require a hyperbolic pair");
    if (i < 1) throw IndexOutOfRange("rotation power index must be >= 1");
    return {chebyshev_c(pair.theta, 2 * i + 1), -chebyshev_c(pair.theta, 2 * i),
            chebyshev_c(pair.theta, 2 * i), -chebyshev_c(pair.theta, 2 * i - 1)};
}

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.m00 * rhs.m00 + lhs.m01 * rhs.m10, lhs.m00 * rhs.m01 + lhs.m01 * rhs.m11,
            lhs.m10 * rhs.m00 + lhs.m11 * rhs.m10, lhs.m10 * rhs.m01 + lhs.m11 * rhs.m11};
}

double mat2_det(const Mat2& m) {
    // Kahan's determinant: the fma residual restores the bits lost to
    // cancellation between the two products.
    const double w = m.m01 * m.m10;
    const double e = std::fma(-m.m01, m.m10, w);
    const double f = std::fma(m.m00, m.m11, -w);
    return f + e;
}

NormalizedPoint periodic_limit(const DihedralPair& pair, const Vec& c) {
    const double pa = pair.datum.bilinear(pair.a, c);
    const double pb = pair.datum.bilinear(pair.b, c);
    if (std::abs(pa) <= kSeedTol && std::abs(pb) <= kSeedTol)
        throw DegenerateSeed("seed pairs to zero against both roots");

    // Case (1): the rotation fixes the seed's ray, so the seed already
    // sits on one of the two isotropic directions.
    Vec image = rotate(pair, c);
    double dot_ic = 0.0, dot_cc = 0.0, norm_i = 0.0;
    for (size_t k = 0; k < c.size(); ++k) {
        dot_ic += image[k] * c[k];
        dot_cc += c[k] * c[k];
        norm_i += image[k] * image[k];
    }
    if (dot_cc > 0.0) {
        const double lambda = dot_ic / dot_cc;
        double resid = 0.0;
        for (size_t k = 0; k < c.size(); ++k)
            resid = std::max(resid, std::abs(image[k] - lambda * c[k]));
        if (resid <= kCollinearTol * std::max(1.0, std::sqrt(norm_i)))
            return normalize(c);
    }

    Vec cur = normalize(c).coords;
    for (int iter = 0; iter < kIterationCap; ++iter) {
        const Vec next = normalize(rotate(pair, cur)).coords;
        if (max_norm_distance(next, cur) < kConvergenceTol) return {next};
        cur = next;
    }
    throw NoConvergence("rotation iteration did not settle within the cap");
}

std::array<double, 4> limit_pairings(const DihedralPair& pair) {
    if (pair.kind == DihedralKind::Affine)
        throw AffinePair("limit pairings require a hyperbolic pair");
    return {pair.datum.bilinear(pair.a_inf.coords, pair.a),
            pair.datum.bilinear(pair.a_inf.coords, pair.b),
            pair.datum.bilinear(pair.b_inf.coords, pair.a),
            pair.datum.bilinear(pair.b_inf.coords, pair.b)};
}

std::vector<Root> maximal_dihedral_plane(const CoxeterDatum& datum, const Vec& a, const Vec& b,
                                         const RootTable& table) {
    if (a.size() != b.size() || a.size() != static_cast<size_t>(datum.rank()))
        throw DimensionMismatch("vector length does not match datum rank");
    constexpr double kPlaneTol = 1e-9;

    // Least-squares projection onto span{a, b} via the 2x2 normal equations.
    double aa = 0.0, ab = 0.0, bb = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        aa += a[k] * a[k];
        ab += a[k] * b[k];
        bb += b[k] * b[k];
    }
    const double det = aa * bb - ab * ab;

    std::vector<Root> in_plane;
    for (const Root& r : table.roots()) {
        double ax = 0.0, bx = 0.0;
        for (size_t k = 0; k < a.size(); ++k) {
            ax += a[k] * r.coords[k];
            bx += b[k] * r.coords[k];
        }
        double s, t;
        if (std::abs(det) > 1e-14 * std::max(1.0, aa * bb)) {
            s = (bb * ax - ab * bx) / det;
            t = (aa * bx - ab * ax) / det;
        } else {  // a, b collinear: project onto the line through a
            s = ax / aa;
            t = 0.0;
        }
        double resid = 0.0;
        for (size_t k = 0; k < a.size(); ++k)
            resid = std::max(resid, std::abs(r.coords[k] - s * a[k] - t * b[k]));
        if (resid <= kPlaneTol) in_plane.push_back(r);
    }
    return in_plane;
}

}  // namespace coxlimits
