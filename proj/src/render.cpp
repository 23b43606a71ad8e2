#include "coxlimits/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace coxlimits {

namespace {

constexpr double kMarginPx = 60.0;
constexpr int kConicSegments = 512;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

// Vertex positions of the projection frame: a segment for rank 2, a regular
// n-gon (first vertex on top) otherwise.
std::vector<std::pair<double, double>> frame_vertices(int rank, const RenderSpec& spec) {
    const double cx = spec.width / 2.0;
    const double cy = spec.height / 2.0;
    const double radius = std::min(spec.width, spec.height) / 2.0 - kMarginPx;
    std::vector<std::pair<double, double>> verts;
    if (rank == 2) {
        verts.push_back({cx - radius, cy});
        verts.push_back({cx + radius, cy});
        return verts;
    }
    for (int k = 0; k < rank; ++k) {
        const double angle = M_PI / 2.0 + 2.0 * M_PI * k / rank;
        verts.push_back({cx + radius * std::cos(angle), cy - radius * std::sin(angle)});
    }
    return verts;
}

// Interior direction of the isotropic cone: the eigenvector of the Gram
// matrix for its most negative eigenvalue, found by Jacobi rotations.
bool cone_center(const CoxeterDatum& datum, Vec& center) {
    const int n = datum.rank();
    std::vector<double> m(static_cast<size_t>(n) * n);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i) * n + i] = 1.0;
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = datum.gram(i, j);
    }
    auto at = [&](std::vector<double>& a, int i, int j) -> double& {
        return a[static_cast<size_t>(i) * n + j];
    };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += std::abs(at(m, i, j));
        if (off < 1e-14) break;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (std::abs(at(m, i, j)) < 1e-15) continue;
                const double phi = 0.5 * std::atan2(2.0 * at(m, i, j), at(m, j, j) - at(m, i, i));
                const double c = std::cos(phi), s = std::sin(phi);
                for (int k = 0; k < n; ++k) {
                    const double mik = at(m, i, k), mjk = at(m, j, k);
                    at(m, i, k) = c * mik - s * mjk;
                    at(m, j, k) = s * mik + c * mjk;
                }
                for (int k = 0; k < n; ++k) {
                    const double mki = at(m, k, i), mkj = at(m, k, j);
                    at(m, k, i) = c * mki - s * mkj;
                    at(m, k, j) = s * mki + c * mkj;
                }
                for (int k = 0; k < n; ++k) {
                    const double vki = at(v, k, i), vkj = at(v, k, j);
                    at(v, k, i) = c * vki - s * vkj;
                    at(v, k, j) = s * vki + c * vkj;
                }
            }
        }
    }
    int best = -1;
    double best_ev = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ev = at(m, i, i);
        if (ev < best_ev) { best_ev = ev; best = i; }
    }
    if (best < 0) return false;  // positive semidefinite form: no real cone
    center.assign(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) center[static_cast<size_t>(k)] = at(v, k, best);
    const double s = coord_sum(center);
    if (std::abs(s) < 1e-12) return false;
    for (double& c : center) c /= s;
    return isotropy(datum, center) < 0.0;
}

}  // namespace

void project_point(const CoxeterDatum& datum, const RenderSpec& spec, const Vec& coords,
                   double& x, double& y) {
    const auto verts = frame_vertices(datum.rank(), spec);
    x = 0.0;
    y = 0.0;
    for (size_t k = 0; k < coords.size(); ++k) {
        x += coords[k] * verts[k].first;
        y += coords[k] * verts[k].second;
    }
}

std::string render_svg(const CoxeterDatum& datum, const RootTable& table,
                       const LimitCloud* limits, const RenderSpec& spec) {
    const int n = datum.rank();
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
        << "<rect width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"#ffffff\"/>\n";

    const auto verts = frame_vertices(n, spec);
    svg << "<g id=\"frame\" stroke=\"#999999\" fill=\"none\">\n<path d=\"";
    for (size_t k = 0; k < verts.size(); ++k)
        svg << (k == 0 ? "M" : "L") << fmt6(verts[k].first) << " " << fmt6(verts[k].second);
    svg << (n > 2 ? "Z" : "") << "\"/>\n</g>\n";

    if (spec.layer_conic) {
        svg << "<g id=\"conic\" stroke=\"#2060c0\" stroke-width=\"1.5\" fill=\"none\">\n";
        if (n == 2) {
            // The cone meets the segment in at most two points.
            const auto& r = table.roots();
            if (r.size() >= 2) {
                try {
                    const auto pts = line_isotropic_intersections(datum, normalize(r[0].coords),
                                                                  normalize(r[1].coords));
                    for (const auto& pt : pts) {
                        double x, y;
                        project_point(datum, spec, pt.coords, x, y);
                        svg << "<circle cx=\"" << fmt6(x) << "\" cy=\"" << fmt6(y)
                            << "\" r=\"3.000000\" fill=\"#2060c0\" stroke=\"none\"/>\n";
                    }
                } catch (const Error&) {
                }
            }
        } else if (n == 3) {
            Vec center;
            if (cone_center(datum, center)) {
                // March rays from the interior point: each hits the oval once.
                svg << "<path d=\"";
                bool first = true;
                for (int seg = 0; seg <= kConicSegments; ++seg) {
                    const double phi = 2.0 * M_PI * (seg % kConicSegments) / kConicSegments;
                    // Direction in the sum-zero plane spanned by two fixed chords.
                    Vec dir(static_cast<size_t>(n), 0.0);
                    dir[0] += std::cos(phi);
                    dir[1] -= std::cos(phi);
                    dir[1] += std::sin(phi);
                    dir[2] -= std::sin(phi);
                    const double a = datum.bilinear(dir, dir);
                    const double b = 2.0 * datum.bilinear(center, dir);
                    const double c = isotropy(datum, center);
                    const double disc = b * b - 4.0 * a * c;
                    if (disc < 0.0 || std::abs(a) < 1e-300) { continue; }
                    const double t = (-b + std::sqrt(disc)) / (2.0 * a);
                    Vec pt(static_cast<size_t>(n));
                    for (int k = 0; k < n; ++k)
                        pt[static_cast<size_t>(k)] = center[static_cast<size_t>(k)] + t * dir[static_cast<size_t>(k)];
                    double x, y;
                    project_point(datum, spec, pt, x, y);
                    svg << (first ? "M" : "L") << fmt6(x) << " " << fmt6(y);
                    first = false;
                }
                svg << "\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    if (spec.layer_roots) {
        svg << "<g id=\"roots\" stroke=\"none\">\n";
        const int maxd = std::max(1, table.max_depth());
        for (const Root& r : table.roots()) {
            double x, y;
            project_point(datum, spec, normalize(r.coords).coords, x, y);
            const int shade = 200 - (200 * std::min(r.depth, maxd)) / maxd;  // dark = deep
            svg << "<circle cx=\"" << fmt6(x) << "\" cy=\"" << fmt6(y)
                << "\" r=\"2.000000\" fill=\"rgb(" << shade << "," << shade << "," << shade
                << ")\"/>\n";
        }
        svg << "</g>\n";
    }

    if (spec.layer_limits && limits != nullptr) {
        svg << "<g id=\"limits\" stroke=\"none\" fill=\"#cc2020\">\n";
        for (const auto& pt : limits->points) {
            double x, y;
            project_point(datum, spec, pt.coords, x, y);
            svg << "<circle cx=\"" << fmt6(x) << "\" cy=\"" << fmt6(y) << "\" r=\"2.500000\"/>\n";
        }
        svg << "</g>\n";
    }

    if (spec.layer_labels) {
        svg << "<g id=\"labels\" font-family=\"monospace\" font-size=\"14\" fill=\"#333333\">\n";
        for (int k = 0; k < n; ++k) {
            svg << "<text x=\"" << fmt6(verts[static_cast<size_t>(k)].first + 6.0) << "\" y=\""
                << fmt6(verts[static_cast<size_t>(k)].second - 6.0) << "\">" << datum.label(k)
                << "</text>\n";
        }
        svg << "</g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace coxlimits
