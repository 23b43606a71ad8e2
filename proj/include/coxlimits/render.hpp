#pragma once

#include <string>

#include "coxlimits/limit_roots.hpp"
#include "coxlimits/rootgen.hpp"

namespace coxlimits {

/// Rendering parameters. The projection is chosen by rank: rank 2 maps to
/// a horizontal segment, rank 3 to an equilateral triangle, rank >= 4 to a
/// regular polygon. The conic layer (a 512-segment polyline tracing the
/// normalized isotropic cone) is available for ranks 2 and 3 only.
struct RenderSpec {
    int width = 800;
    int height = 800;
    bool layer_roots = true;
    bool layer_conic = true;
    bool layer_limits = true;
    bool layer_labels = false;
};

/// Deterministic SVG scatter of the normalized roots, the isotropic conic
/// and sampled limit points: fixed header, fixed element order, 6-decimal
/// coordinates. Byte-identical for identical inputs.
std::string render_svg(const CoxeterDatum& datum, const RootTable& table,
                       const LimitCloud* limits, const RenderSpec& spec);

/// Viewport position of a normalized point (coordinates summing to 1).
void project_point(const CoxeterDatum& datum, const RenderSpec& spec, const Vec& coords,
                   double& x, double& y);

}  // namespace coxlimits
