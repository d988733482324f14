#include "mupoly/arith.hpp"
#include "mupoly/budget.hpp"
#include "mupoly/edge_polytope.hpp"
#include "mupoly/ehrhart.hpp"
#include "mupoly/enumerate.hpp"
#include "mupoly/errors.hpp"
#include "mupoly/families.hpp"
#include "mupoly/io.hpp"
#include "mupoly/polytope.hpp"
#include "mupoly/profile.hpp"
#include "mupoly/semigroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace mupoly;

struct Options {
    std::string input;  // file path, or "-" for stdin
    std::string family; // alternative input source for polytope commands
    int d = -1;
    int j = -1;
    int m = -1;
    int k = 1;
    std::string format = "json";
    std::int64_t max_points = Budget::kDefaultPointCap;
    std::int64_t max_subsets = Budget::kDefaultSubsetCap;
    double time_cap = 0.0;
    int threads = 1;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Polytope build_family(const Options& o) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw BadParameters(std::string("family ") + o.family + " requires " + what);
    };
    if (o.family == "berkeley") {
        need(o.d >= 0 && o.j >= 0, "--d and --j");
        return berkeley(o.d, o.j);
    }
    if (o.family == "example_2_4") {
        need(o.m >= 0, "--m");
        return example_2_4(o.m);
    }
    if (o.family == "example_2_5") {
        need(o.d >= 0, "--d");
        return example_2_5(o.d);
    }
    if (o.family == "example_2_6") return example_2_6();
    if (o.family == "boston") {
        need(o.d >= 0, "--d");
        return boston(o.d);
    }
    if (o.family == "minkowski_sum") {
        auto [p, q] = minkowski_pair();
        return minkowski_sum(p, q);
    }
    throw BadParameters("unknown family: " + o.family +
                        " (expected berkeley, example_2_4, example_2_5, example_2_6, boston, "
                        "minkowski_sum)");
}

Polytope resolve_polytope(const Options& o) {
    if (!o.family.empty() && !o.input.empty())
        throw BadInput("give either an input file or --family, not both");
    if (o.family.empty() && o.input.empty())
        throw BadInput("no input: pass a polytope JSON file ('-' for stdin) or --family");
    if (!o.family.empty()) return build_family(o);
    return read_polytope_json(read_input(o.input));
}

SimpleGraph resolve_graph(const Options& o) {
    if (o.input.empty()) throw BadInput("no input: pass a graph JSON file ('-' for stdin)");
    return read_graph_json(read_input(o.input));
}

RunConfig run_config(const Options& o) {
    RunConfig cfg;
    cfg.budget.point_cap = o.max_points;
    cfg.budget.subset_cap = o.max_subsets;
    cfg.budget.time_cap_seconds = o.time_cap;
    cfg.threads = o.threads;
    return cfg;
}

bool tsv(const Options& o) { return o.format == "tsv"; }

int cmd_points(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    Int k(o.k);
    std::vector<IntVec> chart = lattice_points(p, k, cfg.budget, cfg.threads);
    std::vector<IntVec> ambient;
    ambient.reserve(chart.size());
    for (const IntVec& x : chart) ambient.push_back(p.chart_to_ambient_dilated(x, k));
    std::sort(ambient.begin(), ambient.end());
    std::cout << (tsv(o) ? write_points_tsv(ambient) : write_points_json(ambient));
    return 0;
}

int cmd_delta(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    DeltaVector dv = delta_vector(p, cfg.budget, cfg.threads);
    std::cout << (tsv(o) ? write_delta_tsv(dv) : write_delta_json(dv));
    return 0;
}

int cmd_hilbert(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    std::vector<GradedPoint> basis = hilbert_basis_graded(p, cfg.budget, cfg.threads);
    std::cout << (tsv(o) ? write_graded_tsv(p, basis) : write_graded_json(p, basis));
    return 0;
}

int cmd_holes(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    std::vector<Hole> holes = box_points(p, cfg.budget);
    std::cout << (tsv(o) ? write_holes_tsv(p, holes) : write_holes_json(p, holes));
    return 0;
}

int cmd_idp(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    Int k(o.k);
    IdpResult r = is_idp(p, k, cfg.budget, cfg.threads);
    std::cout << (tsv(o) ? write_idp_tsv(p, k, r) : write_idp_json(p, k, r));
    return 0;
}

int cmd_very_ample(const Options& o) {
    Polytope p = resolve_polytope(o);
    RunConfig cfg = run_config(o);
    Int k(o.k);
    bool va = is_very_ample(p, k, cfg.budget);
    std::cout << (tsv(o) ? write_va_tsv(k, va) : write_va_json(k, va));
    return 0;
}

int cmd_profile(const Options& o) {
    Polytope p = resolve_polytope(o);
    ProfileReport r = mu_profile(p, run_config(o));
    std::cout << (tsv(o) ? write_profile_tsv(r) : write_profile_json(p, r));
    return r.hole_exact ? 0 : 2;
}

int cmd_family(const Options& o) {
    if (o.family.empty()) throw BadParameters("family: missing name");
    std::cout << write_polytope_json(build_family(o));
    return 0;
}

int cmd_graph_profile(const Options& o) {
    SimpleGraph g = resolve_graph(o);
    GraphProfile r = graph_profile(g, run_config(o));
    std::cout << (tsv(o) ? write_graph_profile_tsv(r) : write_graph_profile_json(r));
    return (r.midp_exact && r.idp_exact) ? 0 : 2;
}

int cmd_graph_occ(const Options& o) {
    SimpleGraph g = resolve_graph(o);
    RunConfig cfg = run_config(o);
    bool occ = odd_cycle_condition(g, cfg.budget);
    if (tsv(o)) {
        std::cout << "occ\t" << (occ ? "true" : "false") << '\n';
    } else {
        nlohmann::json doc;
        doc["occ"] = occ;
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

void add_io_options(CLI::App* cmd, Options& o, bool with_family) {
    cmd->add_option("input", o.input, "input JSON file, or - for stdin");
    if (with_family) {
        cmd->add_option("--family", o.family,
                        "use a named fixture instead of an input file "
                        "(berkeley, example_2_4, example_2_5, example_2_6, boston, minkowski_sum)");
        cmd->add_option("--d", o.d, "family parameter d");
        cmd->add_option("--j", o.j, "family parameter j");
        cmd->add_option("--m", o.m, "family parameter m");
    }
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--max-points", o.max_points, "enumeration budget: lattice points / search nodes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-subsets", o.max_subsets, "search budget: candidate subsets / pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--time-cap", o.time_cap, "wall-clock cap in seconds (0 = off)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--threads", o.threads, "parallelism degree for enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dilation invariants of lattice polytopes"};
    app.require_subcommand(1);
    Options o;
    int code = 0;

    auto* points = app.add_subcommand("points", "lattice points of the k-th dilation");
    points->add_option("--k", o.k, "dilation factor")->check(CLI::PositiveNumber);
    add_io_options(points, o, true);
    points->callback([&] { code = cmd_points(o); });

    auto* delta = app.add_subcommand("delta", "Ehrhart delta vector");
    add_io_options(delta, o, true);
    delta->callback([&] { code = cmd_delta(o); });

    auto* hilbert = app.add_subcommand("hilbert", "graded Hilbert basis of the cone over P");
    add_io_options(hilbert, o, true);
    hilbert->callback([&] { code = cmd_hilbert(o); });

    auto* holes = app.add_subcommand("holes", "semigroup holes with witness simplices");
    add_io_options(holes, o, true);
    holes->callback([&] { code = cmd_holes(o); });

    auto* idp = app.add_subcommand("idp", "integer decomposition property of the k-th dilation");
    idp->add_option("--k", o.k, "dilation factor")->check(CLI::PositiveNumber);
    add_io_options(idp, o, true);
    idp->callback([&] { code = cmd_idp(o); });

    auto* va = app.add_subcommand("very-ample", "very ampleness of the k-th dilation");
    va->add_option("--k", o.k, "dilation factor")->check(CLI::PositiveNumber);
    add_io_options(va, o, true);
    va->callback([&] { code = cmd_very_ample(o); });

    auto* profile = app.add_subcommand("profile", "all six dilation invariants");
    add_io_options(profile, o, true);
    profile->callback([&] { code = cmd_profile(o); });

    auto* family = app.add_subcommand("family", "print a named fixture polytope as JSON");
    family->add_option("name", o.family, "fixture name")->required();
    family->add_option("--d", o.d, "family parameter d");
    family->add_option("--j", o.j, "family parameter j");
    family->add_option("--m", o.m, "family parameter m");
    family->callback([&] { code = cmd_family(o); });

    auto* graph = app.add_subcommand("graph", "edge-polytope invariants of a simple graph");
    graph->require_subcommand(1);
    auto* gprofile = graph->add_subcommand("profile", "invariants of the edge polytope");
    add_io_options(gprofile, o, false);
    gprofile->callback([&] { code = cmd_graph_profile(o); });
    auto* gocc = graph->add_subcommand("occ", "odd cycle condition");
    add_io_options(gocc, o, false);
    gocc->callback([&] { code = cmd_graph_occ(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return code;
}
