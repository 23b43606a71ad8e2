#pragma once

#include <cstddef>
#include <vector>

#include "coxlimits/rootgen.hpp"

namespace coxlimits {

enum class DominanceDirection { XdomY, YdomX, Equal, None };
enum class DominanceMethod { Gram, Separation, Oracle };

struct DominanceVerdict {
    bool present = false;  // B(x, y) >= 1
    DominanceDirection direction = DominanceDirection::None;
    DominanceMethod method = DominanceMethod::Gram;
};

/// Dominance exists between positive roots x, y iff B(x, y) >= 1.
bool dominance_present(const CoxeterDatum& datum, const Vec& x, const Vec& y);

/// Directs a comparable pair geometrically: on the line through the
/// normalized roots, the dominant one separates the other from the
/// isotropic cone. Throws NotComparable when B < 1 and Degenerate in the
/// tangent case |B - 1| <= 1e-9 (the caller falls back to the oracle).
DominanceDirection dominates_separation(const CoxeterDatum& datum, const Vec& x, const Vec& y);

/// Word-enumeration certificate for "x dominates y": scans all words of
/// length <= max_len (skipping immediate generator repeats) for a witness
/// sending x negative while keeping y positive. A false return is exact;
/// a true return is exact only relative to the cutoff.
bool dominates_oracle(const CoxeterDatum& datum, const Vec& x, const Vec& y, int max_len,
                      std::size_t word_budget = 50'000'000);

/// Presence via the Gram criterion, direction via separation with the
/// oracle as tangent-case fallback.
DominanceVerdict decide_dominance(const CoxeterDatum& datum, const Vec& x, const Vec& y,
                                  int oracle_len = 8);

/// All table roots dominating `base` (the cone A over base), base included,
/// in canonical table order.
std::vector<Root> dominance_cone(const CoxeterDatum& datum, const Root& base,
                                 const RootTable& table, int oracle_len = 8);

}  // namespace coxlimits
