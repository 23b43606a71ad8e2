#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxlimits/datum.hpp"

namespace coxlimits {

/// A positive root together with its BFS provenance. `depth` is the
/// minimal number of simple reflections sending some simple root to this
/// root; `word` (zero-based generators, rightmost applied first) and
/// `base` witness that: apply_word(word, simple_root(base)) == coords.
struct Root {
    Vec coords;
    int depth = 0;
    int base = 0;
    std::vector<int> word;
    double norm_sum = 0.0;  // coordinate sum, the functional |v|
};

/// A point of the transverse hyperplane: coordinates sum to 1.
struct NormalizedPoint {
    Vec coords;
};

/// Positive roots up to a depth bound in canonical order (ascending
/// depth, then lexicographic coordinates). Immutable after generation.
class RootTable {
public:
    const CoxeterDatum& datum() const { return datum_; }
    int max_depth() const { return max_depth_; }
    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    const Root& operator[](std::size_t i) const { return roots_[i]; }

    /// Index of the table root within 1e-8 (max-norm) of `coords`.
    std::optional<std::size_t> find(const Vec& coords) const;

    friend RootTable generate_positive_roots(const CoxeterDatum&, int, std::size_t);

private:
    CoxeterDatum datum_;
    int max_depth_ = 0;
    std::vector<Root> roots_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid_;

    RootTable() = default;
    void grid_insert(std::size_t index);
    std::optional<std::size_t> grid_lookup(const Vec& coords) const;
};

inline constexpr std::size_t kDefaultRootCapacity = 5'000'000;

/// Breadth-first enumeration of the positive roots reachable by words of
/// length <= max_depth from the simple roots, deduplicated at 1e-8.
RootTable generate_positive_roots(const CoxeterDatum& datum, int max_depth,
                                  std::size_t capacity = kDefaultRootCapacity);

/// Central projection onto the coordinate-sum-1 hyperplane.
NormalizedPoint normalize(const Vec& v);

/// B(p, p); zero exactly on the isotropic cone.
double isotropy(const CoxeterDatum& datum, const Vec& p);

/// Applies the reflections named by `word` right to left: word {s,t}
/// computes r_s(r_t(v)). Indices are zero-based.
Vec apply_word(const CoxeterDatum& datum, const std::vector<int>& word, Vec v);

double max_norm_distance(const Vec& u, const Vec& v);

}  // namespace coxlimits
