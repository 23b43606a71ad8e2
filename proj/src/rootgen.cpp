#include "coxlimits/rootgen.hpp"

#include <algorithm>
#include <cmath>

namespace coxlimits {

namespace {

constexpr double kDedupTol = 1e-8;
constexpr double kGridCell = 1e-6;
constexpr double kNegativeCoordTol = 1e-9;
constexpr double kZeroSumTol = 1e-14;

std::uint64_t hash_cell(const std::vector<std::int64_t>& cell) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::int64_t k : cell) {
        auto u = static_cast<std::uint64_t>(k);
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (u >> (8 * byte)) & 0xffull;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::vector<std::int64_t> cell_of(const Vec& coords) {
    std::vector<std::int64_t> cell(coords.size());
    for (size_t k = 0; k < coords.size(); ++k)
        cell[k] = static_cast<std::int64_t>(std::floor(coords[k] / kGridCell));
    return cell;
}

// Cells a point within kDedupTol of `coords` may fall in: the home cell,
// plus the neighbor along every coordinate that sits near a cell boundary.
void neighbor_cells(const Vec& coords, std::vector<std::vector<std::int64_t>>& out) {
    out.clear();
    out.push_back(cell_of(coords));
    const double slack = 2.0 * kDedupTol;
    for (size_t k = 0; k < coords.size(); ++k) {
        const double cellpos = coords[k] / kGridCell;
        const double frac = cellpos - std::floor(cellpos);
        int delta = 0;
        if (frac * kGridCell <= slack) delta = -1;
        else if ((1.0 - frac) * kGridCell <= slack) delta = +1;
        if (delta != 0) {
            const size_t existing = out.size();
            for (size_t e = 0; e < existing; ++e) {
                auto cell = out[e];
                cell[k] += delta;
                out.push_back(std::move(cell));
            }
        }
    }
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

double max_norm_distance(const Vec& u, const Vec& v) {
    double d = 0.0;
    for (size_t k = 0; k < u.size(); ++k) d = std::max(d, std::abs(u[k] - v[k]));
    return d;
}

void RootTable::grid_insert(std::size_t index) {
    grid_[hash_cell(cell_of(roots_[index].coords))].push_back(static_cast<std::uint32_t>(index));
}

std::optional<std::size_t> RootTable::grid_lookup(const Vec& coords) const {
    std::vector<std::vector<std::int64_t>> cells;
    neighbor_cells(coords, cells);
    for (const auto& cell : cells) {
        auto it = grid_.find(hash_cell(cell));
        if (it == grid_.end()) continue;
        for (std::uint32_t idx : it->second) {
            if (max_norm_distance(roots_[idx].coords, coords) <= kDedupTol) return idx;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> RootTable::find(const Vec& coords) const {
    if (coords.size() != static_cast<size_t>(datum_.rank()))
        throw DimensionMismatch("vector length does not match datum rank");
    return grid_lookup(coords);
}

RootTable generate_positive_roots(const CoxeterDatum& datum, int max_depth,
                                  std::size_t capacity) {
    if (max_depth < 0) throw IndexOutOfRange("max_depth must be nonnegative");

    RootTable table;
    table.datum_ = datum;
    table.max_depth_ = max_depth;

    const int n = datum.rank();
    std::vector<Root> layer;
    for (int s = 0; s < n; ++s) {
        Root r;
        r.coords = datum.simple_root(s);
        r.depth = 0;
        r.base = s;
        r.norm_sum = 1.0;
        layer.push_back(std::move(r));
    }
    std::sort(layer.begin(), layer.end(),
              [](const Root& a, const Root& b) { return lex_less(a.coords, b.coords); });
    for (auto& r : layer) {
        table.roots_.push_back(r);
        table.grid_insert(table.roots_.size() - 1);
    }

    std::size_t layer_begin = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        const std::size_t layer_end = table.roots_.size();
        std::vector<Root> candidates;
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (int s = 0; s < n; ++s) {
                Vec image = table.roots_[i].coords;
                datum.reflect_in_place(s, image);
                bool positive = true;
                for (double c : image) {
                    if (c < -kNegativeCoordTol) { positive = false; break; }
                }
                if (!positive) continue;
                Root r;
                r.coords = std::move(image);
                r.depth = depth;
                r.base = table.roots_[i].base;
                r.word.reserve(table.roots_[i].word.size() + 1);
                r.word.push_back(s);
                r.word.insert(r.word.end(), table.roots_[i].word.begin(),
                              table.roots_[i].word.end());
                r.norm_sum = coord_sum(r.coords);
                candidates.push_back(std::move(r));
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Root& a, const Root& b) { return lex_less(a.coords, b.coords); });
        layer_begin = table.roots_.size();
        for (auto& cand : candidates) {
            if (table.grid_lookup(cand.coords)) continue;
            if (table.roots_.size() >= capacity)
                throw CapacityExceeded("root table would exceed capacity of " +
                                       std::to_string(capacity));
            table.roots_.push_back(std::move(cand));
            table.grid_insert(table.roots_.size() - 1);
        }
        if (layer_begin == table.roots_.size()) break;  // frontier exhausted (finite system)
    }
    return table;
}

NormalizedPoint normalize(const Vec& v) {
    const double s = coord_sum(v);
    if (std::abs(s) <= kZeroSumTol)
        throw OnZeroHyperplane("coordinate sum is zero; point lies on V0");
    NormalizedPoint p;
    p.coords.resize(v.size());
    for (size_t k = 0; k < v.size(); ++k) p.coords[k] = v[k] / s;
    return p;
}

double isotropy(const CoxeterDatum& datum, const Vec& p) {
    return datum.bilinear(p, p);
}

Vec apply_word(const CoxeterDatum& datum, const std::vector<int>& word, Vec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) datum.reflect_in_place(*it, v);
    return v;
}

}  // namespace coxlimits
