#include <CLI11.hpp>

#include "coxlimits/cli.hpp"

namespace cli = coxlimits::cli;

namespace {

void add_datum_options(CLI::App* cmd, cli::DatumOptions& opt) {
    cmd->add_option("datum", opt.datum_file, "datum file (gram format unless --coxeter)")
        ->required();
    cmd->add_flag("--coxeter", opt.coxeter_format,
                  "parse the file as an integer Coxeter matrix (0 = infinite bond)");
    cmd->add_option("--infinity-bond", opt.infinity_bond,
                    "Gram value for infinite bonds in --coxeter mode (must be <= -1)");
    cmd->add_option("--overrides", opt.overrides_file,
                    "overrides file with lines 'i j value' for infinite bonds");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coxlimits: asymptotics of infinite Coxeter root systems"};
    app.require_subcommand(1);

    cli::RootsOptions roots;
    auto* roots_cmd = app.add_subcommand("roots", "enumerate positive roots breadth-first");
    add_datum_options(roots_cmd, roots.datum);
    roots_cmd->add_option("--depth", roots.depth, "depth bound")->required();
    roots_cmd->add_option("--format", roots.format, "csv or json");
    roots_cmd->add_option("--out", roots.out, "output path, - for stdout");
    roots_cmd->add_option("--cap", roots.capacity, "root table capacity");

    cli::DihedralOptions dihedral;
    auto* dihedral_cmd =
        app.add_subcommand("dihedral", "closed-form asymptotics of a dihedral pair");
    add_datum_options(dihedral_cmd, dihedral.datum);
    dihedral_cmd->add_option("--a", dihedral.a_spec, "first root, WORD@k")->required();
    dihedral_cmd->add_option("--b", dihedral.b_spec, "second root, WORD@k")->required();
    dihedral_cmd->add_option("--iters", dihedral.iters, "convergence table length");
    dihedral_cmd->add_option("--out", dihedral.out, "output path, - for stdout");

    cli::LimitsOptions limits;
    auto* limits_cmd = app.add_subcommand("limits", "estimate the limit roots numerically");
    add_datum_options(limits_cmd, limits.datum);
    limits_cmd->add_option("--depth", limits.depth, "table depth")->required();
    limits_cmd->add_option("--min-depth", limits.min_depth, "depth floor for the estimate")
        ->required();
    limits_cmd->add_option("--cluster-tol", limits.cluster_tol, "cluster tolerance");
    limits_cmd->add_option("--pairs", limits.pairs, "dihedral pair budget");
    limits_cmd->add_option("--word-budget", limits.word_budget, "orbit word length budget");
    limits_cmd->add_option("--out", limits.out, "limit CSV path")->required();
    limits_cmd->add_option("--summary", limits.summary, "summary JSON path");
    limits_cmd->add_option("--cap", limits.capacity, "root table capacity");

    cli::DominanceOptions dominance;
    auto* dominance_cmd =
        app.add_subcommand("dominance", "dominance verdicts with the oracle as referee");
    add_datum_options(dominance_cmd, dominance.datum);
    dominance_cmd->add_option("--depth", dominance.depth, "table depth")->required();
    dominance_cmd->add_option("--max-pairs", dominance.max_pairs, "pair budget")->required();
    dominance_cmd->add_option("--oracle-len", dominance.oracle_len, "oracle word length");
    dominance_cmd->add_option("--seed", dominance.seed, "pair sampling seed");
    dominance_cmd->add_option("--out", dominance.out, "output path, - for stdout");
    dominance_cmd->add_option("--cap", dominance.capacity, "root table capacity");

    cli::RenderOptions render;
    auto* render_cmd = app.add_subcommand("render", "deterministic SVG of the normalized picture");
    add_datum_options(render_cmd, render.datum);
    render_cmd->add_option("--depth", render.depth, "table depth")->required();
    render_cmd->add_option("--out", render.out, "SVG path")->required();
    render_cmd->add_option("--layers", render.layers, "comma list: roots,conic,limits,labels");
    render_cmd->add_option("--width", render.width, "viewport width");
    render_cmd->add_option("--height", render.height, "viewport height");
    render_cmd->add_option("--pairs", render.pairs, "dihedral pair budget for the limits layer");
    render_cmd->add_option("--word-budget", render.word_budget, "orbit word budget");
    render_cmd->add_option("--cap", render.capacity, "root table capacity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitBadArguments;
    }

    if (roots_cmd->parsed()) return cli::cmd_roots(roots);
    if (dihedral_cmd->parsed()) return cli::cmd_dihedral(dihedral);
    if (limits_cmd->parsed()) return cli::cmd_limits(limits);
    if (dominance_cmd->parsed()) return cli::cmd_dominance(dominance);
    if (render_cmd->parsed()) return cli::cmd_render(render);
    return cli::kExitBadArguments;
}
