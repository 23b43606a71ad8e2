#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlimits/dihedral.hpp"
#include "coxlimits/dominance.hpp"
#include "coxlimits/rootgen.hpp"

namespace coxlimits {

struct Provenance {
    enum class Kind { DeepRoot, DihedralPair, Orbit };
    Kind kind = Kind::DeepRoot;
    int depth = -1;              // DeepRoot
    int pair_i = -1, pair_j = -1;  // DihedralPair: table indices
    std::vector<int> word;       // Orbit: zero-based word
    std::string base;            // Orbit: name of the orbit seed
    std::string to_string() const;
};

/// Numerically estimated limit roots: normalized points with their
/// isotropy residuals and where they came from. Points are pairwise at
/// least cluster_tol apart in max-norm.
struct LimitCloud {
    std::vector<NormalizedPoint> points;
    std::vector<double> residuals;
    std::vector<Provenance> provenance;
    double cluster_tol = 0.0;
};

/// Normalizations of the table roots of depth >= min_depth, greedily
/// clustered in canonical order (first representative kept). A finite-depth
/// estimate of the limit set, not the limit set itself.
LimitCloud estimate_limit_cloud(const CoxeterDatum& datum, const RootTable& table,
                                int min_depth, double cluster_tol);

/// Real intersections of the line through p and q with the normalized
/// isotropic cone, ordered along the segment parameter. For normalized
/// roots the count follows the |B(x,y)| trichotomy (<1, =1, >1 at 1e-9).
std::vector<NormalizedPoint> line_isotropic_intersections(const CoxeterDatum& datum,
                                                          const NormalizedPoint& p,
                                                          const NormalizedPoint& q);

/// w . x = normalized image of x under the word; every intermediate image
/// must keep a nonzero coordinate sum.
NormalizedPoint dot_action(const CoxeterDatum& datum, const std::vector<int>& word,
                           const NormalizedPoint& p);

struct GeometricActionCheck {
    bool fixed_point = false;
    double residual = 0.0;
};

/// Checks the projective picture of the reflection in root alpha at an
/// isotropic point x: either x is fixed (B(alpha,x) = 0) or {x, r_alpha.x}
/// is exactly the line-cone intersection pair. Returns the max residual.
GeometricActionCheck verify_geometric_action(const CoxeterDatum& datum, const Vec& alpha,
                                             const NormalizedPoint& x);

struct NeighborhoodProbe {
    DihedralPair pair;
    int index = 0;                      // i of a_i = (r_a r_b)^i a
    Vec a_i;                            // sequence_root(pair, i, A)
    double certificate_margin = 0.0;    // B(a_i, eta) for the last probed eta
};

NeighborhoodProbe make_neighborhood_probe(const DihedralPair& pair, int i);

/// Positivity certificate B(a_i, eta) > 0 from the neighborhood lemma;
/// records the margin in the probe. The margin is evaluated through the
/// split B(a_i,eta) = e^{-2 i theta} B(a,eta) + c_{2i} B(e^theta a + b, eta),
/// whose second coefficient vanishes identically when eta is this pair's
/// own a-side limit; values within 1e-12 of zero are treated as that case,
/// which keeps deep indices meaningful for points known only to double
/// precision.
bool certify_neighborhood(NeighborhoodProbe& probe, const NormalizedPoint& eta);

/// Finite-table approximation of "eta lies in N_i": some root dominating
/// a_i normalizes to within eps of eta. Sound only relative to the table
/// depth and eps.
bool neighborhood_membership(const DihedralPair& pair, int i, const RootTable& table,
                             const NormalizedPoint& eta, double eps);

/// Smallest i <= i_max whose certificate fails at eta, if any. Genuine
/// limit points other than a_inf acquire a witness; a_inf never does.
std::optional<int> shrink_witness(const DihedralPair& pair, const NormalizedPoint& eta,
                                  int i_max);

/// Membership in the fundamental cone: nonnegative, nonzero, and
/// B(v, a_s) <= 0 against every simple root.
bool fundamental_cone_contains(const CoxeterDatum& datum, const Vec& v);

/// Exact limit points of dihedral reflection subgroups sampled from the
/// table: a_inf/b_inf of up to pair_budget hyperbolic pairs plus the
/// dot-action orbit of the first pair's a_inf under words of length
/// <= word_budget, clustered.
LimitCloud sample_e2(const CoxeterDatum& datum, const RootTable& table, int pair_budget,
                     int word_budget, double cluster_tol = 1e-8);

}  // namespace coxlimits
