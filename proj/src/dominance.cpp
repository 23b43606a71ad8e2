#include "coxlimits/dominance.hpp"

#include <cmath>

namespace coxlimits {

namespace {

constexpr double kPresenceTol = 1e-9;
constexpr double kTangentTol = 1e-9;
constexpr double kEqualTol = 1e-8;

struct OracleState {
    const CoxeterDatum* datum;
    int max_len;
    std::size_t budget;
    std::size_t visited = 0;
    bool witness_found = false;
};

// Depth-first over words with no immediate repeats, extending on the left:
// at each node the images are w.x and w.y. A witness is w.x negative with
// w.y positive.
void oracle_dfs(OracleState& st, Vec& x, Vec& y, int last, int depth) {
    if (st.witness_found || depth == st.max_len) return;
    const int n = st.datum->rank();
    for (int s = 0; s < n; ++s) {
        if (s == last) continue;
        if (++st.visited > st.budget)
            throw CapacityExceeded("dominance oracle exceeded its word budget");
        st.datum->reflect_in_place(s, x);
        st.datum->reflect_in_place(s, y);
        if (coord_sum(x) < 0.0 && coord_sum(y) > 0.0) {
            st.witness_found = true;
        } else {
            oracle_dfs(st, x, y, s, depth + 1);
        }
        st.datum->reflect_in_place(s, x);  // involutive undo
        st.datum->reflect_in_place(s, y);
        if (st.witness_found) return;
    }
}

}  // namespace

bool dominance_present(const CoxeterDatum& datum, const Vec& x, const Vec& y) {
    return datum.bilinear(x, y) >= 1.0 - kPresenceTol;
}

DominanceDirection dominates_separation(const CoxeterDatum& datum, const Vec& x, const Vec& y) {
    const double bxy = datum.bilinear(x, y);
    if (bxy < 1.0 - kPresenceTol)
        throw NotComparable("no dominance between the pair: B(x,y) < 1");
    if (std::abs(bxy - 1.0) <= kTangentTol)
        throw Degenerate("tangent case B(x,y) = 1: separation picture degenerates");

    const Vec p = normalize(x).coords;
    const Vec q = normalize(y).coords;
    Vec d(p.size());
    for (size_t k = 0; k < p.size(); ++k) d[k] = q[k] - p[k];

    // Isotropic points on the segment line p + t d; t = 0 is x-hat, t = 1 is y-hat.
    const double a = datum.bilinear(d, d);
    const double b = 2.0 * datum.bilinear(p, d);
    const double c = datum.bilinear(p, p);
    double t_lo, t_hi;
    if (std::abs(a) <= 1e-14 * std::max(1.0, std::abs(b))) {
        if (std::abs(b) <= 1e-300) throw Degenerate("segment line degenerate against the cone");
        t_lo = t_hi = -c / b;
    } else {
        const double disc = b * b - 4.0 * a * c;
        if (disc <= 0.0)
            throw Degenerate("expected two isotropic intersections for a comparable pair");
        const double r = std::sqrt(disc);
        const double t1 = (-b - r) / (2.0 * a);
        const double t2 = (-b + r) / (2.0 * a);
        t_lo = std::min(t1, t2);
        t_hi = std::max(t1, t2);
    }

    if (t_hi < 0.0) return DominanceDirection::XdomY;  // x-hat shields y-hat from the cone
    if (t_lo > 1.0) return DominanceDirection::YdomX;
    throw Degenerate("isotropic intersections do not separate the pair cleanly");
}

bool dominates_oracle(const CoxeterDatum& datum, const Vec& x, const Vec& y, int max_len,
                      std::size_t word_budget) {
    if (max_len < 1) throw IndexOutOfRange("oracle max_len must be >= 1");
    OracleState st;
    st.datum = &datum;
    st.max_len = max_len;
    st.budget = word_budget;
    Vec xi = x, yi = y;
    oracle_dfs(st, xi, yi, -1, 0);
    return !st.witness_found;
}

DominanceVerdict decide_dominance(const CoxeterDatum& datum, const Vec& x, const Vec& y,
                                  int oracle_len) {
    DominanceVerdict v;
    if (max_norm_distance(x, y) <= kEqualTol) {
        v.present = true;
        v.direction = DominanceDirection::Equal;
        v.method = DominanceMethod::Gram;
        return v;
    }
    v.present = dominance_present(datum, x, y);
    if (!v.present) return v;
    try {
        v.direction = dominates_separation(datum, x, y);
        v.method = DominanceMethod::Separation;
    } catch (const Degenerate&) {
        const bool xy = dominates_oracle(datum, x, y, oracle_len);
        const bool yx = dominates_oracle(datum, y, x, oracle_len);
        v.method = DominanceMethod::Oracle;
        if (xy && !yx) v.direction = DominanceDirection::XdomY;
        else if (yx && !xy) v.direction = DominanceDirection::YdomX;
        else v.direction = DominanceDirection::None;  // unresolved at this cutoff
    }
    return v;
}

std::vector<Root> dominance_cone(const CoxeterDatum& datum, const Root& base,
                                 const RootTable& table, int oracle_len) {
    if (!table.find(base.coords))
        throw BaseNotInTable("dominance cone base is not a table root");
    std::vector<Root> cone;
    for (const Root& r : table.roots()) {
        if (max_norm_distance(r.coords, base.coords) <= kEqualTol) {
            cone.push_back(r);
            continue;
        }
        if (!dominance_present(datum, r.coords, base.coords)) continue;
        const auto verdict = decide_dominance(datum, r.coords, base.coords, oracle_len);
        if (verdict.direction == DominanceDirection::XdomY) cone.push_back(r);
    }
    return cone;
}

}  // namespace coxlimits
