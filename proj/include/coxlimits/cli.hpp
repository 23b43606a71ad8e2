#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlimits/datum.hpp"

namespace coxlimits::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidDatum = 2;
inline constexpr int kExitBadArguments = 3;
inline constexpr int kExitCapacity = 4;
inline constexpr int kExitNotInfiniteDihedral = 5;
inline constexpr int kExitDominanceDisagreement = 6;

struct DatumOptions {
    std::string datum_file;
    bool coxeter_format = false;
    double infinity_bond = -1.25;
    std::string overrides_file;  // optional, coxeter format only
};

struct RootsOptions {
    DatumOptions datum;
    int depth = 0;
    std::string format = "csv";  // csv | json
    std::string out = "-";
    std::size_t capacity = 5'000'000;
};

struct DihedralOptions {
    DatumOptions datum;
    std::string a_spec;  // WORD@k, e.g. "1,2@1" or "@1"
    std::string b_spec;
    int iters = 20;
    std::string out = "-";
};

struct LimitsOptions {
    DatumOptions datum;
    int depth = 0;
    int min_depth = 0;
    double cluster_tol = 1e-4;
    int pairs = 1000;
    int word_budget = 4;
    std::string out;
    std::string summary;  // defaults to out + ".summary.json"
    std::size_t capacity = 5'000'000;
};

struct DominanceOptions {
    DatumOptions datum;
    int depth = 0;
    std::size_t max_pairs = 0;
    int oracle_len = 8;
    unsigned seed = 0;
    std::string out = "-";
    std::size_t capacity = 5'000'000;
};

struct RenderOptions {
    DatumOptions datum;
    int depth = 0;
    std::string out;
    std::string layers = "roots,conic,limits";
    int width = 800;
    int height = 800;
    int pairs = 200;
    int word_budget = 4;
    std::size_t capacity = 5'000'000;
};

int cmd_roots(const RootsOptions& opt);
int cmd_dihedral(const DihedralOptions& opt);
int cmd_limits(const LimitsOptions& opt);
int cmd_dominance(const DominanceOptions& opt);
int cmd_render(const RenderOptions& opt);

/// Parses the root spec grammar WORD@k: a comma-separated one-based word
/// (possibly empty) applied right to left to the k-th simple root.
Vec parse_root_spec(const CoxeterDatum& datum, const std::string& spec);

CoxeterDatum load_datum(const DatumOptions& opt);

}  // namespace coxlimits::cli
