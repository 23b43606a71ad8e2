#include "coxlimits/io.hpp"

#include <cmath>
#include <cstdio>

namespace coxlimits {

namespace {

std::string word_csv(const std::vector<int>& word) {
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += '-';
        s += std::to_string(word[k] + 1);  // one-based on the wire
    }
    return s;
}

std::string json_vec(const Vec& v) {
    std::string s = "[";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += fmt17(v[k]);
    }
    return s + "]";
}

std::string json_word(const std::vector<int>& word) {
    std::string s = "[";
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(word[k] + 1);
    }
    return s + "]";
}

}  // namespace

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string direction_name(DominanceDirection d) {
    switch (d) {
        case DominanceDirection::XdomY: return "XdomY";
        case DominanceDirection::YdomX: return "YdomX";
        case DominanceDirection::Equal: return "Equal";
        case DominanceDirection::None: return "None";
    }
    return "None";
}

std::string method_name(DominanceMethod m) {
    switch (m) {
        case DominanceMethod::Gram: return "gram";
        case DominanceMethod::Separation: return "separation";
        case DominanceMethod::Oracle: return "oracle";
    }
    return "gram";
}

void write_roots_csv(std::ostream& os, const CoxeterDatum& datum, const RootTable& table) {
    const int n = datum.rank();
    os << "index,depth,word";
    for (int k = 1; k <= n; ++k) os << ",coeff_" << k;
    os << ",norm_sum";
    for (int k = 1; k <= n; ++k) os << ",nhat_" << k;
    os << ",q_normalized\n";
    for (size_t i = 0; i < table.size(); ++i) {
        const Root& r = table[i];
        os << i << "," << r.depth << "," << word_csv(r.word);
        for (double c : r.coords) os << "," << fmt17(c);
        os << "," << fmt17(r.norm_sum);
        const NormalizedPoint nh = normalize(r.coords);
        for (double c : nh.coords) os << "," << fmt17(c);
        os << "," << fmt17(isotropy(datum, nh.coords)) << "\n";
    }
}

void write_roots_json(std::ostream& os, const CoxeterDatum& datum, const RootTable& table) {
    os << "{\"rank\":" << datum.rank() << ",\"max_depth\":" << table.max_depth()
       << ",\"roots\":[";
    for (size_t i = 0; i < table.size(); ++i) {
        const Root& r = table[i];
        const NormalizedPoint nh = normalize(r.coords);
        if (i) os << ",";
        os << "{\"index\":" << i << ",\"depth\":" << r.depth << ",\"word\":" << json_word(r.word)
           << ",\"coeffs\":" << json_vec(r.coords) << ",\"norm_sum\":" << fmt17(r.norm_sum)
           << ",\"nhat\":" << json_vec(nh.coords)
           << ",\"q_normalized\":" << fmt17(isotropy(datum, nh.coords)) << "}";
    }
    os << "]}\n";
}

void write_dihedral_json(std::ostream& os, const DihedralPair& pair,
                         const std::vector<ConvergenceRow>& convergence) {
    os << "{\"theta\":" << fmt17(pair.theta) << ",\"kind\":\""
       << (pair.kind == DihedralKind::Hyperbolic ? "hyperbolic" : "affine") << "\""
       << ",\"b_ab\":" << fmt17(pair.b_ab) << ",\"a\":" << json_vec(pair.a)
       << ",\"b\":" << json_vec(pair.b) << ",\"a_inf\":" << json_vec(pair.a_inf.coords)
       << ",\"b_inf\":" << json_vec(pair.b_inf.coords);
    if (pair.kind == DihedralKind::Hyperbolic) {
        const auto pr = limit_pairings(pair);
        os << ",\"pairings\":[" << fmt17(pr[0]) << "," << fmt17(pr[1]) << "," << fmt17(pr[2])
           << "," << fmt17(pr[3]) << "]";
    }
    os << ",\"convergence\":[";
    for (size_t k = 0; k < convergence.size(); ++k) {
        if (k) os << ",";
        os << "{\"i\":" << convergence[k].i
           << ",\"distance_to_a_inf\":" << fmt17(convergence[k].distance_to_a_inf) << "}";
    }
    os << "]}\n";
}

void write_limits_csv(std::ostream& os, int rank, const LimitCloud& cloud) {
    os << "index";
    for (int k = 1; k <= rank; ++k) os << ",nhat_" << k;
    os << ",q_residual,provenance\n";
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        os << i;
        for (double c : cloud.points[i].coords) os << "," << fmt17(c);
        // provenance may contain commas, so it travels quoted
        os << "," << fmt17(cloud.residuals[i]) << ",\"" << cloud.provenance[i].to_string()
           << "\"\n";
    }
}

void write_limits_summary_json(std::ostream& os, const LimitsSummary& s) {
    os << "{\"point_count\":" << s.point_count << ",\"max_residual\":" << fmt17(s.max_residual)
       << ",\"cross_validation_max_distance\":"
       << (s.has_cross_validation ? fmt17(s.cross_validation_max_distance) : "null")
       << ",\"min_depth\":" << s.min_depth << ",\"cluster_tol\":" << fmt17(s.cluster_tol)
       << "}\n";
}

void write_dominance_csv(std::ostream& os, const std::vector<DominanceRow>& rows) {
    os << "x_index,y_index,B_xy,present,direction,method\n";
    for (const auto& r : rows) {
        os << r.x_index << "," << r.y_index << "," << fmt17(r.b_xy) << "," << (r.present ? 1 : 0)
           << "," << direction_name(r.direction) << "," << method_name(r.method) << "\n";
    }
}

void write_neighborhood_json(std::ostream& os, const NeighborhoodProbe& probe,
                             const std::vector<NeighborhoodProbeRow>& probes) {
    os << "{\"pair\":{\"theta\":" << fmt17(probe.pair.theta) << ",\"a\":" << json_vec(probe.pair.a)
       << ",\"b\":" << json_vec(probe.pair.b) << "},\"i\":" << probe.index
       << ",\"a_i\":" << json_vec(probe.a_i) << ",\"probes\":[";
    for (size_t k = 0; k < probes.size(); ++k) {
        if (k) os << ",";
        os << "{\"eta\":" << json_vec(probes[k].eta.coords) << ",\"margin\":" << fmt17(probes[k].margin)
           << ",\"certified\":" << (probes[k].certified ? "true" : "false") << "}";
    }
    os << "]}\n";
}

}  // namespace coxlimits
