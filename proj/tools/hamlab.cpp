#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamlab/edge_list.hpp"
#include "hamlab/experiments.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/instance_spec.hpp"
#include "hamlab/pruning.hpp"
#include "hamlab/solver.hpp"

namespace {

using namespace hamlab;

// Exit codes: 0 Hamiltonian (or analysis inconclusive), 1 non-Hamiltonian,
// 2 timeout, 3 malformed input, 4 other runtime errors.  Flag-parsing errors
// use CLI11's own codes, all of which are above 2 as well.
constexpr int kExitHam = 0;
constexpr int kExitNonHam = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitError = 4;

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// --seed beats HAMLAB_SEED beats fresh entropy; callers echo the winner so
// any run can be replayed from its own output.
std::uint64_t effective_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HAMLAB_SEED")) {
        std::uint64_t out = 0;
        std::istringstream in(env);
        if (!(in >> out) || !in.eof())
            throw std::runtime_error("HAMLAB_SEED is not a number: " + std::string(env));
        return out;
    }
    return entropy_seed();
}

Graph load_graph(const std::string& path, const std::string& spec_str) {
    if (!spec_str.empty()) return build_instance(parse_spec(spec_str));
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

int with_output(const std::string& path, const std::function<int(std::ostream&)>& fn) {
    if (path == "-") return fn(std::cout);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kExitError;
    }
    const int rc = fn(out);
    out.flush();
    if (!out) {
        std::cerr << "write to " << path << " failed\n";
        return kExitError;
    }
    return rc;
}

Heuristic parse_heuristic(const std::string& name) {
    if (name == "low") return Heuristic::LowDegreeFirst;
    if (name == "high") return Heuristic::HighDegreeFirst;
    return Heuristic::RandomOrder;
}

InSearchChecks parse_checks(const std::string& name) {
    InSearchChecks checks;
    checks.components = name == "components" || name == "both";
    checks.cutpoints = name == "cutpoints" || name == "both";
    return checks;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::optional<int> n, a, b, rows, cols, s;
    std::optional<long> m;
    std::optional<double> k, p3;
    int version = 2;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

InstanceParams gen_params(const GenArgs& args) {
    auto need = [&](const auto& opt, const char* flag) {
        if (!opt)
            throw std::runtime_error("gen: --" + std::string(flag) + " is required for family " +
                                     args.family);
        return *opt;
    };
    if (args.family == "gnm") return GnmParams{need(args.n, "n"), need(args.m, "m")};
    if (args.family == "gnmk") return GnmByKParams{need(args.n, "n"), need(args.k, "k")};
    if (args.family == "gnstar") return GnStarParams{need(args.n, "n")};
    if (args.family == "degreebound")
        return DegreeboundParams{need(args.n, "n"), need(args.p3, "p3"), args.version};
    if (args.family == "knight")
        return KnightParams{need(args.a, "a"), need(args.b, "b"), need(args.rows, "rows"),
                            need(args.cols, "cols")};
    const double k = need(args.k, "k");
    if (k != std::floor(k)) throw std::runtime_error("gen: iccs --k must be an integer");
    return IccsParams{static_cast<int>(k), need(args.s, "s")};
}

int cmd_gen(const GenArgs& args) {
    InstanceSpec spec;
    spec.params = gen_params(args);
    const bool seeded = args.family != "knight";
    spec.seed = seeded ? effective_seed(args.seed) : 0;
    const Graph g = build_instance(spec);
    if (seeded) std::cerr << "seed=" << spec.seed << "\n";
    return with_output(args.out, [&](std::ostream& out) {
        write_edge_list(out, g, canonical_spec(spec));
        return kExitHam;
    });
}

// --- solve / oracle --------------------------------------------------------

struct SolveArgs {
    std::string input = "-";
    std::string spec;
    std::string heuristic = "low";
    std::string checks = "none";
    bool no_restart = false;
    double multiplier = 2.0;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;
    std::optional<int> start;
    std::optional<std::uint64_t> seed;
};

SearchConfig solver_config(const SolveArgs& args) {
    SearchConfig cfg;
    cfg.heuristic = parse_heuristic(args.heuristic);
    cfg.restarts_enabled = !args.no_restart;
    cfg.restart_multiplier = args.multiplier;
    cfg.initial_limit_factor = args.multiplier;  // first limit is multiplier * n
    cfg.node_limit = args.node_limit;
    cfg.time_limit_seconds = args.time_limit;
    cfg.checks = parse_checks(args.checks);
    cfg.start_vertex = args.start;
    cfg.seed = effective_seed(args.seed);
    return cfg;
}

void print_outcome(const SolveOutcome& outcome) {
    switch (outcome.kind) {
        case SolveOutcome::Kind::Hamiltonian: {
            std::cout << "HC";
            for (int v : outcome.cycle) std::cout << ' ' << v;
            std::cout << '\n';
            break;
        }
        case SolveOutcome::Kind::NonHamiltonian:
            std::cout << "NONHAM";
            break;
        case SolveOutcome::Kind::Timeout:
            std::cout << "TIMEOUT\n";
            break;
    }
}

int exit_code(SolveOutcome::Kind kind) {
    switch (kind) {
        case SolveOutcome::Kind::Hamiltonian: return kExitHam;
        case SolveOutcome::Kind::NonHamiltonian: return kExitNonHam;
        case SolveOutcome::Kind::Timeout: return kExitTimeout;
    }
    return kExitError;
}

int cmd_solve(const SolveArgs& args) {
    const Graph g = load_graph(args.input, args.spec);
    SearchConfig cfg = solver_config(args);
    std::cerr << "seed=" << cfg.seed << "\n";
    const SolveResult res = solve(g, cfg);
    if (res.outcome.kind == SolveOutcome::Kind::NonHamiltonian)
        std::cout << "NONHAM " << to_string(res.outcome.reason) << ' '
                  << to_string(res.stats.phase) << '\n';
    else
        print_outcome(res.outcome);
    std::cout << "nodes=" << res.stats.nodes << " restarts=" << res.stats.restarts
              << " ms=" << res.stats.wall_ms << '\n';
    return exit_code(res.outcome.kind);
}

int cmd_oracle(const std::string& input, const std::string& spec) {
    const Graph g = load_graph(input, spec);
    const SolveOutcome outcome = brute_force_oracle(g);
    if (outcome.kind == SolveOutcome::Kind::NonHamiltonian)
        std::cout << "NONHAM\n";
    else
        print_outcome(outcome);
    return exit_code(outcome.kind);
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string input = "-";
    std::string spec;
    bool parity = false;
    int cutset = 0;  // 0 = off, otherwise max cut size 1..3
    bool count3d2 = false;
    bool theory = false;
};

void print_set(const std::vector<int>& ids) {
    std::cout << '{';
    for (std::size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << ids[i];
    std::cout << '}';
}

int cmd_analyze(const AnalyzeArgs& args) {
    const Graph g = load_graph(args.input, args.spec);
    if (!args.parity && args.cutset == 0 && !args.count3d2 && !args.theory) {
        std::cerr << "analyze: nothing requested (use --parity, --cutset K, --count-3d2,"
                     " --theory)\n";
        return kExitError;
    }
    bool nonham = false;
    if (args.parity) {
        const ParityResult res = forced_degree_parity_test(g);
        if (res.non_hamiltonian) {
            nonham = true;
            std::cout << "NONHAM odd forced degree, component=";
            print_set(res.component);
            std::cout << ", fdeg=" << res.forced_degree << '\n';
        } else {
            std::cout << "INCONCLUSIVE\n";
        }
    }
    if (args.cutset > 0) {
        const CutsetResult res = small_cutset_scan(g, args.cutset);
        if (res.non_hamiltonian) {
            nonham = true;
            std::cout << "NONHAM cut=";
            print_set(res.cut);
            std::cout << " components=" << res.component_count << '\n';
        } else {
            std::cout << "INCONCLUSIVE\n";
        }
    }
    if (args.count3d2) std::cout << "3d2=" << count_3d2(g) << '\n';
    if (args.theory) std::cout << "theory=" << ham_probability_theory(g.order(), g.edge_count()) << '\n';
    return nonham ? kExitNonHam : kExitHam;
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
    std::string family;
    std::string n_list, m_list, k_list, dbar_list, s_list, rows_list, cols_list;
    int a = 1, b = 2;
    int version = 2;
    int trials = 200;
    int workers = 1;
    std::string heuristic = "low";
    std::string checks = "none";
    bool no_restart = false;
    double multiplier = 2.0;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

// Sweep definitions load from a flat `key = value` file ('#' comments, blank
// lines allowed); keys mirror the long flag names, and any flag given on the
// command line overrides its config value.
std::map<std::string, std::string> read_flat_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::map<std::string, std::string> out;
    std::string line;
    long line_no = 0;
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.pop_back();
        std::size_t at = 0;
        while (at < s.size() && (s[at] == ' ' || s[at] == '\t')) ++at;
        return s.substr(at);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        const std::string where = path + ":" + std::to_string(line_no);
        if (eq == std::string::npos) throw std::runtime_error(where + ": expected key = value");
        const std::string key = strip(text.substr(0, eq));
        const std::string value = strip(text.substr(eq + 1));
        if (key.empty()) throw std::runtime_error(where + ": empty key");
        if (!out.emplace(key, value).second)
            throw std::runtime_error(where + ": duplicate key " + key);
    }
    return out;
}

void apply_sweep_config(const std::string& path, const CLI::App& cmd, SweepArgs& args) {
    const std::map<std::string, std::string> kv = read_flat_config(path);
    std::map<std::string, std::function<void(const std::string&)>> sinks;
    auto store_str = [](std::string& field) {
        return [&field](const std::string& v) { field = v; };
    };
    auto store_int = [](int& field) {
        return [&field](const std::string& v) { field = static_cast<int>(std::stol(v)); };
    };
    sinks["family"] = store_str(args.family);
    sinks["n"] = store_str(args.n_list);
    sinks["m"] = store_str(args.m_list);
    sinks["k"] = store_str(args.k_list);
    sinks["dbar"] = store_str(args.dbar_list);
    sinks["s"] = store_str(args.s_list);
    sinks["rows"] = store_str(args.rows_list);
    sinks["cols"] = store_str(args.cols_list);
    sinks["a"] = store_int(args.a);
    sinks["b"] = store_int(args.b);
    sinks["version"] = store_int(args.version);
    sinks["trials"] = store_int(args.trials);
    sinks["workers"] = store_int(args.workers);
    sinks["heuristic"] = store_str(args.heuristic);
    sinks["checks"] = store_str(args.checks);
    sinks["no-restart"] = [&args](const std::string& v) {
        args.no_restart = v == "true" || v == "1" || v == "yes" || v == "on";
    };
    sinks["multiplier"] = [&args](const std::string& v) { args.multiplier = std::stod(v); };
    sinks["node-limit"] = [&args](const std::string& v) { args.node_limit = std::stoull(v); };
    sinks["time-limit"] = [&args](const std::string& v) { args.time_limit = std::stod(v); };
    sinks["seed"] = [&args](const std::string& v) { args.seed = std::stoull(v); };
    sinks["out"] = store_str(args.out);
    for (const auto& [key, value] : kv) {
        const auto sink = sinks.find(key);
        if (sink == sinks.end()) throw std::runtime_error("config: unknown key " + key);
        if (cmd.count("--" + key) > 0) continue;  // command line wins
        try {
            sink->second(value);
        } catch (const std::exception&) {
            throw std::runtime_error("config: bad value for " + key + ": \"" + value + "\"");
        }
    }
}

double parse_grid_num(const std::string& tok, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("sweep: --" + flag + ": bad number \"" + tok + "\"");
    }
}

// Grid syntax: comma-separated values, each either a number or an inclusive
// start:stop:step range, e.g. "100,200" or "2.60:3.00:0.02".
std::vector<double> expand_grid(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) continue;
        const auto c1 = tok.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_grid_num(tok, flag));
            continue;
        }
        const auto c2 = tok.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::runtime_error("sweep: --" + flag + ": ranges are start:stop:step");
        const double start = parse_grid_num(tok.substr(0, c1), flag);
        const double stop = parse_grid_num(tok.substr(c1 + 1, c2 - c1 - 1), flag);
        const double step = parse_grid_num(tok.substr(c2 + 1), flag);
        if (step <= 0 || stop < start)
            throw std::runtime_error("sweep: --" + flag + ": empty range \"" + tok + "\"");
        for (long i = 0;; ++i) {
            // Recompute from the endpoints (no accumulation drift) and snap
            // away float fuzz so grid values print cleanly in spec strings.
            const double v = std::round((start + i * step) * 1e12) / 1e12;
            if (v > stop + step * 1e-9) break;
            out.push_back(v);
        }
    }
    if (out.empty()) throw std::runtime_error("sweep: --" + flag + " list is empty");
    return out;
}

std::vector<int> expand_int_grid(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    for (double v : expand_grid(text, flag)) {
        if (v != std::floor(v) || v < 0 || v > 1e9)
            throw std::runtime_error("sweep: --" + flag + " values must be integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

SweepSpec build_sweep(const SweepArgs& args) {
    // Config-file values bypass the flag validators, so re-check here.
    auto member = [](const std::string& value, std::initializer_list<const char*> allowed,
                     const char* flag) {
        for (const char* ok : allowed)
            if (value == ok) return;
        throw std::runtime_error("sweep: --" + std::string(flag) + ": invalid value \"" + value +
                                 "\"");
    };
    if (args.family.empty()) throw std::runtime_error("sweep: --family is required");
    member(args.heuristic, {"low", "high", "random"}, "heuristic");
    member(args.checks, {"none", "components", "cutpoints", "both"}, "checks");
    if (args.version != 1 && args.version != 2)
        throw std::runtime_error("sweep: --version must be 1 or 2");
    if (args.trials < 1) throw std::runtime_error("sweep: --trials must be >= 1");
    if (args.workers < 1) throw std::runtime_error("sweep: --workers must be >= 1");

    SweepSpec spec;
    auto require = [&](const std::string& list, const char* flag) -> const std::string& {
        if (list.empty())
            throw std::runtime_error("sweep: --" + std::string(flag) + " is required for family " +
                                     args.family);
        return list;
    };
    auto add = [&](InstanceParams params, double param) {
        SweepCell cell;
        cell.params = params;
        cell.param = param;
        cell.trials = args.trials;
        spec.cells.push_back(cell);
    };
    if (args.family == "gnm") {
        for (int n : expand_int_grid(require(args.n_list, "n"), "n"))
            for (double m : expand_grid(require(args.m_list, "m"), "m"))
                add(GnmParams{n, static_cast<long>(m)}, m);
    } else if (args.family == "gnmk") {
        for (int n : expand_int_grid(require(args.n_list, "n"), "n"))
            for (double k : expand_grid(require(args.k_list, "k"), "k")) add(GnmByKParams{n, k}, k);
    } else if (args.family == "gnstar") {
        for (int n : expand_int_grid(require(args.n_list, "n"), "n")) add(GnStarParams{n}, n);
    } else if (args.family == "degreebound") {
        // Swept by mean degree: dbar in [2, 3] maps to p3 = dbar - 2.
        for (int n : expand_int_grid(require(args.n_list, "n"), "n"))
            for (double dbar : expand_grid(require(args.dbar_list, "dbar"), "dbar"))
                add(DegreeboundParams{n, std::round((dbar - 2.0) * 1e12) / 1e12, args.version},
                    dbar);
    } else if (args.family == "iccs") {
        for (int s : expand_int_grid(require(args.s_list, "s"), "s"))
            for (int k : expand_int_grid(require(args.k_list, "k"), "k"))
                add(IccsParams{k, s}, k);
    } else if (args.family == "knight") {
        for (int rows : expand_int_grid(require(args.rows_list, "rows"), "rows"))
            for (int cols : expand_int_grid(require(args.cols_list, "cols"), "cols"))
                add(KnightParams{args.a, args.b, rows, cols},
                    static_cast<double>(rows) * cols);
    } else {
        throw std::runtime_error("sweep: unknown family " + args.family);
    }

    SolveArgs solver;
    solver.heuristic = args.heuristic;
    solver.checks = args.checks;
    solver.no_restart = args.no_restart;
    solver.multiplier = args.multiplier;
    solver.node_limit = args.node_limit;
    solver.time_limit = args.time_limit;
    spec.solver = solver_config(solver);
    spec.master_seed = spec.solver.seed = effective_seed(args.seed);
    return spec;
}

int cmd_sweep(const SweepArgs& args) {
    const SweepSpec spec = build_sweep(args);
    std::cerr << "seed=" << spec.master_seed << "\n";
    long total = 0;
    for (const SweepCell& cell : spec.cells) total += cell.trials;
    return with_output(args.out, [&](std::ostream& out) {
        out << csv_header() << '\n';
        long done = 0;
        run_sweep(spec, args.workers, [&](const ResultRecord& rec) {
            out << csv_row(rec) << '\n';
            out.flush();  // rows survive an interrupted run
            ++done;
            if (done % 500 == 0 || done == total)
                std::cerr << "progress " << done << "/" << total << "\n";
        });
        return kExitHam;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hamiltonian-cycle toolkit: generators, solver, sweeps, certificates"};
    app.require_subcommand(1);

    const std::vector<std::string> families{"gnm", "gnmk", "gnstar", "degreebound", "knight",
                                            "iccs"};
    const std::vector<std::string> heuristics{"low", "high", "random"};
    const std::vector<std::string> check_names{"none", "components", "cutpoints", "both"};

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
    gen->add_option("--family", gen_args.family, "Instance family")
        ->required()
        ->check(CLI::IsMember(families));
    gen->add_option("--n", gen_args.n, "Vertex count");
    gen->add_option("--m", gen_args.m, "Edge count (gnm)");
    gen->add_option("--k", gen_args.k, "Degree parameter (gnmk) or subgraph count (iccs)");
    gen->add_option("--p3", gen_args.p3, "Degree-3 fraction (degreebound)");
    gen->add_option("--version", gen_args.version, "Degree-sequence sampler version")
        ->check(CLI::IsMember({1, 2}));
    gen->add_option("--a", gen_args.a, "First move offset (knight)");
    gen->add_option("--b", gen_args.b, "Second move offset (knight)");
    gen->add_option("--rows", gen_args.rows, "Board rows (knight)");
    gen->add_option("--cols", gen_args.cols, "Board columns (knight)");
    gen->add_option("--s", gen_args.s, "Subgraph size (iccs)");
    gen->add_option("--seed", gen_args.seed, "Generator seed");
    gen->add_option("--out", gen_args.out, "Output path ('-' = stdout)");

    auto add_solver_flags = [&](CLI::App* cmd, SolveArgs& args) {
        cmd->add_option("--heuristic", args.heuristic, "Vertex ordering")
            ->check(CLI::IsMember(heuristics));
        cmd->add_flag("--no-restart", args.no_restart, "Single unbounded attempt");
        cmd->add_option("--multiplier", args.multiplier, "Restart limit multiplier")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--node-limit", args.node_limit, "Total search-node cap");
        cmd->add_option("--time-limit", args.time_limit, "Wall-clock cap in seconds");
        cmd->add_option("--checks", args.checks, "In-search structural checks")
            ->check(CLI::IsMember(check_names));
        cmd->add_option("--seed", args.seed, "Solver seed");
    };

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Decide Hamiltonicity of one instance");
    solve_cmd->add_option("input", solve_args.input, "Edge-list path ('-' = stdin)");
    solve_cmd->add_option("--spec", solve_args.spec, "Inline instance spec");
    add_solver_flags(solve_cmd, solve_args);
    solve_cmd->add_option("--start", solve_args.start, "Fixed start vertex");

    std::string oracle_input = "-";
    std::string oracle_spec;
    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference decision (n <= 12)");
    oracle->add_option("input", oracle_input, "Edge-list path ('-' = stdin)");
    oracle->add_option("--spec", oracle_spec, "Inline instance spec");

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "Structural non-Hamiltonicity certificates");
    analyze->add_option("input", analyze_args.input, "Edge-list path ('-' = stdin)");
    analyze->add_option("--spec", analyze_args.spec, "Inline instance spec");
    analyze->add_flag("--parity", analyze_args.parity, "Forced-degree parity test");
    analyze->add_option("--cutset", analyze_args.cutset, "Cut-set scan up to this size")
        ->check(CLI::Range(1, 3));
    analyze->add_flag("--count-3d2", analyze_args.count3d2, "Count 3D2 configurations");
    analyze->add_flag("--theory", analyze_args.theory, "Asymptotic Hamiltonicity probability");

    SweepArgs sweep_args;
    std::string sweep_config;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid, CSV to stdout");
    sweep->add_option("--config", sweep_config, "Flat key=value sweep definition");
    sweep->add_option("--family", sweep_args.family, "Instance family")
        ->check(CLI::IsMember(families));
    sweep->add_option("--n", sweep_args.n_list, "Vertex counts (list / start:stop:step)");
    sweep->add_option("--m", sweep_args.m_list, "Edge counts (gnm)");
    sweep->add_option("--k", sweep_args.k_list, "Degree parameters (gnmk) or k values (iccs)");
    sweep->add_option("--dbar", sweep_args.dbar_list, "Mean degrees (degreebound)");
    sweep->add_option("--s", sweep_args.s_list, "Subgraph sizes (iccs)");
    sweep->add_option("--rows", sweep_args.rows_list, "Board rows (knight)");
    sweep->add_option("--cols", sweep_args.cols_list, "Board columns (knight)");
    sweep->add_option("--a", sweep_args.a, "First move offset (knight)");
    sweep->add_option("--b", sweep_args.b, "Second move offset (knight)");
    sweep->add_option("--version", sweep_args.version, "Degree-sequence sampler version")
        ->check(CLI::IsMember({1, 2}));
    sweep->add_option("--trials", sweep_args.trials, "Trials per cell")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--workers", sweep_args.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--heuristic", sweep_args.heuristic, "Vertex ordering")
        ->check(CLI::IsMember(heuristics));
    sweep->add_flag("--no-restart", sweep_args.no_restart, "Single unbounded attempt");
    sweep->add_option("--multiplier", sweep_args.multiplier, "Restart limit multiplier")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--node-limit", sweep_args.node_limit, "Per-instance node cap");
    sweep->add_option("--time-limit", sweep_args.time_limit, "Per-instance time cap (s)");
    sweep->add_option("--checks", sweep_args.checks, "In-search structural checks")
        ->check(CLI::IsMember(check_names));
    sweep->add_option("--seed", sweep_args.seed, "Master seed");
    sweep->add_option("--out", sweep_args.out, "CSV path ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (oracle->parsed()) return cmd_oracle(oracle_input, oracle_spec);
        if (analyze->parsed()) return cmd_analyze(analyze_args);
        if (sweep->parsed()) {
            if (!sweep_config.empty()) apply_sweep_config(sweep_config, *sweep, sweep_args);
            return cmd_sweep(sweep_args);
        }
    } catch (const EdgeListError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const SpecError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
