#pragma once

#include <array>
#include <vector>

#include "coxlimits/rootgen.hpp"

namespace coxlimits {

enum class DihedralKind { Hyperbolic, Affine };
enum class DihedralSide { A, B };

/// Asymptotic data of the reflection subgroup generated by two positive
/// roots with B(a, b) <= -1. In the hyperbolic case cosh(theta) = -B(a, b)
/// and the two limit points are distinct isotropic directions in span(a,b);
/// in the affine case both collapse to the single isotropic direction.
struct DihedralPair {
    CoxeterDatum datum;
    Vec a, b;             // unit positive roots
    double b_ab = 0.0;    // B(a, b)
    double theta = 0.0;   // arcosh(-B(a, b)); 0 for affine pairs
    DihedralKind kind = DihedralKind::Hyperbolic;
    NormalizedPoint a_inf, b_inf;
    double norm_a = 0.0;  // |a|, coordinate sum
    double norm_b = 0.0;
};

/// Builds the pair data. Inputs are rescaled to unit B-norm, so any
/// positive multiple of a root is accepted. Throws NotInfiniteDihedral
/// when B(a, b) > -1.
DihedralPair make_dihedral_pair(const CoxeterDatum& datum, Vec a, Vec b);

/// c_i = sinh(i theta) / sinh(theta) by the stable linear recurrence
/// c_0 = 0, c_1 = 1, c_{i+1} = 2 cosh(theta) c_i - c_{i-1}.
double chebyshev_c(double theta, int i);

/// The i-th root of the alternating sequence: side A gives
/// c_{2i+1} a + c_{2i} b, side B gives c_{2i} a + c_{2i+1} b.
Vec sequence_root(const DihedralPair& pair, int i, DihedralSide side);

struct Mat2 {
    double m00, m01, m10, m11;
};

/// Closed form for the i-th power of the rotation r_a r_b on span(a, b)
/// in the (a, b) basis: [[c_{2i+1}, -c_{2i}], [c_{2i}, -c_{2i-1}]].
Mat2 rotation_matrix_power(const DihedralPair& pair, int i);

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs);
double mat2_det(const Mat2& m);

/// Limit of the normalized iterates of c under the rotation r_a r_b.
/// Eigenvector seeds return their own normalization (one of the two limit
/// points); every other admissible seed converges to a_inf.
NormalizedPoint periodic_limit(const DihedralPair& pair, const Vec& c);

/// (B(a_inf,a), B(a_inf,b), B(b_inf,a), B(b_inf,b)); signs (+,-,-,+).
std::array<double, 4> limit_pairings(const DihedralPair& pair);

/// All table roots lying in span(a, b): the root system of the maximal
/// dihedral reflection subgroup containing r_a and r_b, up to table depth.
std::vector<Root> maximal_dihedral_plane(const CoxeterDatum& datum, const Vec& a, const Vec& b,
                                         const RootTable& table);

}  // namespace coxlimits
