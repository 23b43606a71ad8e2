#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "coxlimits/dihedral.hpp"
#include "coxlimits/dominance.hpp"
#include "coxlimits/limit_roots.hpp"
#include "coxlimits/rootgen.hpp"

namespace coxlimits {

/// 17 significant digits: round-trip exact for doubles.
std::string fmt17(double v);

std::string direction_name(DominanceDirection d);
std::string method_name(DominanceMethod m);

void write_roots_csv(std::ostream& os, const CoxeterDatum& datum, const RootTable& table);
void write_roots_json(std::ostream& os, const CoxeterDatum& datum, const RootTable& table);

struct ConvergenceRow {
    int i = 0;
    double distance_to_a_inf = 0.0;
};

void write_dihedral_json(std::ostream& os, const DihedralPair& pair,
                         const std::vector<ConvergenceRow>& convergence);

void write_limits_csv(std::ostream& os, int rank, const LimitCloud& cloud);

struct LimitsSummary {
    std::size_t point_count = 0;
    double max_residual = 0.0;
    bool has_cross_validation = false;
    double cross_validation_max_distance = 0.0;
    int min_depth = 0;
    double cluster_tol = 0.0;
};

void write_limits_summary_json(std::ostream& os, const LimitsSummary& summary);

struct DominanceRow {
    std::size_t x_index = 0;
    std::size_t y_index = 0;
    double b_xy = 0.0;
    bool present = false;
    DominanceDirection direction = DominanceDirection::None;
    DominanceMethod method = DominanceMethod::Gram;
};

void write_dominance_csv(std::ostream& os, const std::vector<DominanceRow>& rows);

struct NeighborhoodProbeRow {
    NormalizedPoint eta;
    double margin = 0.0;
    bool certified = false;
};

void write_neighborhood_json(std::ostream& os, const NeighborhoodProbe& probe,
                             const std::vector<NeighborhoodProbeRow>& probes);

}  // namespace coxlimits
