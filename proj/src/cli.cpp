#include "coxlimits/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "coxlimits/dihedral.hpp"
#include "coxlimits/dominance.hpp"
#include "coxlimits/io.hpp"
#include "coxlimits/limit_roots.hpp"
#include "coxlimits/render.hpp"
#include "coxlimits/rootgen.hpp"

namespace coxlimits::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes through a stream so "-" can mean stdout.
int with_output(const std::string& out, const std::function<void(std::ostream&)>& fn) {
    if (out == "-" || out.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot write to " << out << "\n";
        return kExitBadArguments;
    }
    fn(os);
    return kExitOk;
}

Vec reflect_in_root(const CoxeterDatum& datum, const Vec& root, Vec v) {
    const double unit = datum.bilinear(root, root);
    const double pairing = datum.bilinear(root, v);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= 2.0 * (pairing / unit) * root[k];
    return v;
}

}  // namespace

CoxeterDatum load_datum(const DatumOptions& opt) {
    const std::string text = slurp(opt.datum_file);
    if (!opt.coxeter_format) return parse_gram_matrix(text);
    std::vector<BondOverride> overrides;
    if (!opt.overrides_file.empty()) overrides = parse_overrides(slurp(opt.overrides_file));
    return parse_coxeter_matrix(text, opt.infinity_bond, overrides);
}

Vec parse_root_spec(const CoxeterDatum& datum, const std::string& spec) {
    const auto at = spec.find('@');
    if (at == std::string::npos) throw ParseError("root spec needs WORD@k, e.g. 1,2@1 or @1");
    std::vector<int> word;
    const std::string word_part = spec.substr(0, at);
    if (!word_part.empty()) {
        std::istringstream ss(word_part);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                const int s = std::stoi(tok);
                if (s < 1 || s > datum.rank()) throw ParseError("word letter out of range: " + tok);
                word.push_back(s - 1);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("malformed word letter: '" + tok + "'");
            }
        }
    }
    int base = 0;
    try {
        base = std::stoi(spec.substr(at + 1));
    } catch (const std::exception&) {
        throw ParseError("malformed simple-root index in spec: " + spec);
    }
    if (base < 1 || base > datum.rank()) throw ParseError("simple-root index out of range");
    Vec v = apply_word(datum, word, datum.simple_root(base - 1));
    for (double c : v) {
        if (c < -1e-9) throw ParseError("root spec names a negative root: " + spec);
    }
    return v;
}

int cmd_roots(const RootsOptions& opt) {
    try {
        const auto datum = load_datum(opt.datum);
        const auto table = generate_positive_roots(datum, opt.depth, opt.capacity);
        if (opt.format != "csv" && opt.format != "json") {
            std::cerr << "error: --format must be csv or json\n";
            return kExitBadArguments;
        }
        return with_output(opt.out, [&](std::ostream& os) {
            if (opt.format == "csv") write_roots_csv(os, datum, table);
            else write_roots_json(os, datum, table);
        });
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const InvalidDatum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
}

int cmd_dihedral(const DihedralOptions& opt) {
    CoxeterDatum datum = CoxeterDatum::from_gram(1, {1.0});
    try {
        datum = load_datum(opt.datum);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    }
    Vec a, b;
    try {
        a = parse_root_spec(datum, opt.a_spec);
        b = parse_root_spec(datum, opt.b_spec);
        if (opt.iters < 1) throw ParseError("--iters must be >= 1");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    try {
        const auto pair = make_dihedral_pair(datum, a, b);
        std::vector<ConvergenceRow> convergence;
        Vec x = pair.a;
        for (int i = 1; i <= opt.iters; ++i) {
            x = reflect_in_root(datum, pair.a, reflect_in_root(datum, pair.b, x));
            convergence.push_back(
                {i, max_norm_distance(normalize(x).coords, pair.a_inf.coords)});
        }
        return with_output(opt.out,
                           [&](std::ostream& os) { write_dihedral_json(os, pair, convergence); });
    } catch (const NotInfiniteDihedral& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotInfiniteDihedral;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

int cmd_limits(const LimitsOptions& opt) {
    if (opt.out.empty() || opt.out == "-") {
        std::cerr << "error: limits requires --out FILE\n";
        return kExitBadArguments;
    }
    if (opt.min_depth > opt.depth || opt.min_depth < 0 || opt.cluster_tol <= 0.0 ||
        opt.pairs < 1 || opt.word_budget < 1) {
        std::cerr << "error: need 0 <= min-depth <= depth, positive cluster-tol and budgets\n";
        return kExitBadArguments;
    }
    try {
        const auto datum = load_datum(opt.datum);
        const auto table = generate_positive_roots(datum, opt.depth, opt.capacity);

        LimitCloud estimate;
        estimate.cluster_tol = opt.cluster_tol;
        try {
            estimate = estimate_limit_cloud(datum, table, opt.min_depth, opt.cluster_tol);
        } catch (const EmptySelection&) {
            // finite system: nothing accumulates; report an empty cloud
        }

        LimitsSummary summary;
        summary.point_count = estimate.points.size();
        summary.min_depth = opt.min_depth;
        summary.cluster_tol = opt.cluster_tol;
        for (double r : estimate.residuals) summary.max_residual = std::max(summary.max_residual, r);

        try {
            const auto e2 = sample_e2(datum, table, opt.pairs, opt.word_budget);
            if (!estimate.points.empty() && !e2.points.empty()) {
                summary.has_cross_validation = true;
                for (const auto& center : estimate.points) {
                    double best = std::numeric_limits<double>::infinity();
                    for (const auto& pt : e2.points)
                        best = std::min(best, max_norm_distance(center.coords, pt.coords));
                    summary.cross_validation_max_distance =
                        std::max(summary.cross_validation_max_distance, best);
                }
            }
        } catch (const NoHyperbolicPairs&) {
            // no dihedral limit points to validate against
        }

        const std::string summary_path =
            opt.summary.empty() ? opt.out + ".summary.json" : opt.summary;
        const int rc = with_output(opt.out,
                                   [&](std::ostream& os) { write_limits_csv(os, datum.rank(), estimate); });
        if (rc != kExitOk) return rc;
        return with_output(summary_path,
                           [&](std::ostream& os) { write_limits_summary_json(os, summary); });
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const InvalidDatum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

int cmd_dominance(const DominanceOptions& opt) {
    if (opt.depth < 1 || opt.max_pairs < 1 || opt.oracle_len < 1) {
        std::cerr << "error: need --depth >= 1, --max-pairs >= 1, --oracle-len >= 1\n";
        return kExitBadArguments;
    }
    try {
        const auto datum = load_datum(opt.datum);
        const auto table = generate_positive_roots(datum, opt.depth, opt.capacity);

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = i + 1; j < table.size(); ++j) pairs.emplace_back(i, j);
        if (pairs.size() > opt.max_pairs) {
            std::mt19937 rng(opt.seed);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            pairs.resize(opt.max_pairs);
            std::sort(pairs.begin(), pairs.end());
        }

        std::vector<DominanceRow> rows;
        std::size_t disagreements = 0;
        for (const auto& [i, j] : pairs) {
            const Vec& x = table[i].coords;
            const Vec& y = table[j].coords;
            DominanceRow row;
            row.x_index = i;
            row.y_index = j;
            row.b_xy = datum.bilinear(x, y);
            const auto verdict = decide_dominance(datum, x, y, opt.oracle_len);
            row.present = verdict.present;
            row.direction = verdict.direction;
            row.method = verdict.method;
            rows.push_back(row);

            if (!verdict.present || verdict.direction == DominanceDirection::Equal) continue;
            // Referee: an oracle `false` is an exact refutation of a direction.
            const bool oracle_xy = dominates_oracle(datum, x, y, opt.oracle_len);
            const bool oracle_yx = dominates_oracle(datum, y, x, opt.oracle_len);
            const bool mismatch =
                (verdict.direction == DominanceDirection::XdomY && !oracle_xy) ||
                (verdict.direction == DominanceDirection::YdomX && !oracle_yx) ||
                (!oracle_xy && !oracle_yx);
            if (mismatch) {
                ++disagreements;
                std::cerr << "disagreement on pair (" << i << "," << j << "): separation says "
                          << direction_name(verdict.direction) << ", oracle says ("
                          << (oracle_xy ? "T" : "F") << "," << (oracle_yx ? "T" : "F") << ")\n";
            }
        }
        const int rc = with_output(opt.out,
                                   [&](std::ostream& os) { write_dominance_csv(os, rows); });
        if (rc != kExitOk) return rc;
        std::cerr << "checked " << rows.size() << " pairs, " << disagreements
                  << " separation/oracle disagreements\n";
        return disagreements == 0 ? kExitOk : kExitDominanceDisagreement;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const InvalidDatum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

int cmd_render(const RenderOptions& opt) {
    if (opt.out.empty()) {
        std::cerr << "error: render requires --out FILE\n";
        return kExitBadArguments;
    }
    RenderSpec spec;
    spec.width = opt.width;
    spec.height = opt.height;
    spec.layer_roots = spec.layer_conic = spec.layer_limits = spec.layer_labels = false;
    std::istringstream layers(opt.layers);
    std::string layer;
    while (std::getline(layers, layer, ',')) {
        if (layer == "roots") spec.layer_roots = true;
        else if (layer == "conic") spec.layer_conic = true;
        else if (layer == "limits") spec.layer_limits = true;
        else if (layer == "labels") spec.layer_labels = true;
        else if (!layer.empty()) {
            std::cerr << "error: unknown layer '" << layer << "'\n";
            return kExitBadArguments;
        }
    }
    if (spec.width < 64 || spec.height < 64) {
        std::cerr << "error: render needs width and height >= 64\n";
        return kExitBadArguments;
    }
    try {
        const auto datum = load_datum(opt.datum);
        if (datum.rank() < 2) {
            std::cerr << "error: render requires rank >= 2\n";
            return kExitBadArguments;
        }
        if (spec.layer_conic && datum.rank() > 3) {
            std::cerr << "error: the conic layer is only defined for ranks 2 and 3\n";
            return kExitBadArguments;
        }
        const auto table = generate_positive_roots(datum, opt.depth, opt.capacity);
        LimitCloud cloud;
        const LimitCloud* cloud_ptr = nullptr;
        if (spec.layer_limits) {
            try {
                cloud = sample_e2(datum, table, opt.pairs, opt.word_budget);
                cloud_ptr = &cloud;
            } catch (const NoHyperbolicPairs&) {
                // finite or affine system: no limit markers
            }
        }
        const std::string svg = render_svg(datum, table, cloud_ptr, spec);
        return with_output(opt.out, [&](std::ostream& os) { os << svg; });
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const InvalidDatum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    }
}

}  // namespace coxlimits::cli
