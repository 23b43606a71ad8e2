#pragma once

#include <string>
#include <vector>

#include "coxlimits/errors.hpp"

namespace coxlimits {

/// Coefficient vector over the simple roots (the standard basis).
using Vec = std::vector<double>;

/// Bond label for m_ab = infinity.
inline constexpr int kInfinityBond = 0;

enum class BondKind { Finite, Affine, Hyperbolic };

struct BondClass {
    BondKind kind;
    int order;  // m_ab, meaningful for Finite only
};

/// A Coxeter datum in free form: the simple roots are the standard basis
/// of R^rank and the bilinear form is given by a symmetric Gram matrix
/// with unit diagonal. Off-diagonal entries are either -cos(pi/m) for an
/// integer bond m >= 2 or <= -1 (infinite bond). Immutable once built.
class CoxeterDatum {
public:
    /// Empty placeholder; every usable datum comes from from_gram.
    CoxeterDatum() = default;

    /// Validates the matrix and derives the bond table. Throws InvalidDatum.
    static CoxeterDatum from_gram(int rank, Vec gram,
                                  std::vector<std::string> labels = {});

    int rank() const { return rank_; }
    double gram(int i, int j) const { return gram_[static_cast<size_t>(i) * rank_ + j]; }
    /// Bond label m_ij; kInfinityBond encodes infinity.
    int bond(int i, int j) const { return bonds_[static_cast<size_t>(i) * rank_ + j]; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

    double bilinear(const Vec& u, const Vec& v) const;
    /// Simple reflection r_s(v) = v - 2 B(v, a_s) a_s, s zero-based.
    Vec reflect(int s, Vec v) const;
    void reflect_in_place(int s, Vec& v) const;
    /// Trichotomy of the bond between distinct generators i, j.
    BondClass classify_bond(int i, int j) const;
    Vec simple_root(int s) const;

private:
    int rank_ = 0;
    Vec gram_;
    std::vector<int> bonds_;
    std::vector<std::string> labels_;
};

/// Gram file: optional '#' comment lines, then the rank n, then n*n decimals.
CoxeterDatum parse_gram_matrix(const std::string& text);

struct BondOverride {
    int i = 0;  // one-based
    int j = 0;
    double value = 0.0;
};

/// Coxeter file: same shape with integer entries, 0 meaning an infinite
/// bond. Infinite bonds receive `infinity_bond` as their Gram entry unless
/// overridden. Overrides are only legal on infinite bonds and must be <= -1.
CoxeterDatum parse_coxeter_matrix(const std::string& text, double infinity_bond,
                                  const std::vector<BondOverride>& overrides = {});

/// Overrides file: lines "i j value" with one-based indices.
std::vector<BondOverride> parse_overrides(const std::string& text);

double coord_sum(const Vec& v);

}  // namespace coxlimits
