#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "goalclust/goalclust.hpp"
#include "report.hpp"

namespace gcl {

using namespace goalclust;

namespace {

struct GenArgs {
    std::string dist = "normal";
    Index n = 100;
    Index m = 3;
    std::uint64_t seed = 1;
    std::string out;
};

struct SolveArgs {
    std::string algo = "wards";
    double r2t = 0.0;
    std::string input;
    bool standardize = false;
    int rmax = 50;
    double time_limit = 21600.0;
    std::uint64_t seed = 1;
    std::string report;
};

struct OracleArgs {
    std::string input;
    double r2t = 0.0;
    bool standardize = false;
};

struct BenchArgs {
    std::string preset;
    std::string config;
    int seeds = 10;
    std::vector<std::string> algos{"wards", "vns-wards", "kmeans", "vns-kmeans"};
    int rmax = 50;
    double time_limit = 21600.0;
    std::uint64_t seed = 1;
    std::string csv;
    bool per_attribute = false;
};

void require_threshold(double r2t) {
    if (!(r2t > 0.0 && r2t < 1.0)) throw UsageError("--r2t must lie strictly between 0 and 1");
}

Dataset load_input(const std::string& path, bool standardize_it) {
    Dataset ds = load_csv(path);
    return standardize_it ? standardize(ds) : ds;
}

void print_warnings(const Dataset& ds, std::ostream& err) {
    for (const auto& w : ds.warnings()) err << "warning: " << w << '\n';
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    InstanceSpec spec;
    if (a.dist == "normal") spec.distribution = Distribution::Normal01;
    else if (a.dist == "uniform") spec.distribution = Distribution::UniformNeg1Pos1;
    else throw UsageError("--dist must be normal or uniform");
    spec.n = a.n;
    spec.m = a.m;
    spec.seed = a.seed;
    const Dataset ds = generate(spec);
    write_csv(a.out, ds);
    out << instance_name(spec) << '\n';
    return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const auto algo = parse_algorithm(a.algo);
    if (!algo) throw UsageError("--algo must be one of wards, kmeans, vns-wards, vns-kmeans");
    require_threshold(a.r2t);
    if (a.rmax < 1) throw UsageError("--rmax must be at least 1");
    if (!(a.time_limit > 0.0)) throw UsageError("--time-limit must be positive");

    const Dataset ds = load_input(a.input, a.standardize);
    print_warnings(ds, err);
    const GcConfig cfg{a.r2t, *algo, a.rmax, a.time_limit, a.seed};
    const SolveResult result = solve(ds, cfg);
    const SolveReport report = make_report(ds, cfg, result, a.input);
    if (report.r2 < a.r2t - 1e-9) throw SolverError("solver returned an infeasible partition");

    if (!a.report.empty()) {
        std::ofstream f(a.report);
        if (!f) throw DataError("cannot write report " + a.report);
        f << to_json(report).dump(2) << '\n';
    }
    out << "k=" << report.k << " r2=" << std::setprecision(6) << std::fixed << report.r2
        << " time=" << std::setprecision(3) << report.elapsed_seconds << "s\n";
    return kOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    require_threshold(a.r2t);
    const Dataset ds = load_input(a.input, a.standardize);
    const OracleResult res = gc_brute_force(ds, a.r2t);
    out << "optimal_k=" << res.optimal_k << '\n';
    out << "optimal_r2=" << std::setprecision(9) << res.optimal_r2 << '\n';
    out << "partitions=" << res.partitions_enumerated << '\n';
    out << "witness=";
    for (std::size_t i = 0; i < res.witness.size(); ++i) out << (i ? "," : "") << res.witness[i];
    out << "\nclass  best_r2\n";
    for (Index i = 1; i < static_cast<Index>(res.best_per_class.size()); ++i) {
        out << std::setw(5) << i << "  " << std::fixed << std::setprecision(9) << res.best_per_class[static_cast<std::size_t>(i)].r2 << '\n';
    }
    return kOk;
}

std::vector<SuiteEntry> suite_from_config(const std::string& path, BenchArgs& a) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open suite config " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid suite config: ") + e.what());
    }
    std::vector<SuiteEntry> suite;
    try {
        for (const auto& inst : j.at("instances")) {
            SuiteEntry e;
            const auto dist = inst.value("dist", std::string("normal"));
            if (dist != "normal" && dist != "uniform") throw UsageError("instance dist must be normal or uniform");
            e.instance.distribution = dist == "normal" ? Distribution::Normal01 : Distribution::UniformNeg1Pos1;
            e.instance.n = inst.at("n").get<Index>();
            e.instance.m = inst.at("m").get<Index>();
            e.instance.seed = inst.value("seed", std::uint64_t{1});
            e.thresholds = inst.value("r2t", std::vector<double>{0.6, 0.7, 0.8});
            for (double t : e.thresholds) require_threshold(t);
            suite.push_back(std::move(e));
        }
        if (j.contains("algorithms")) a.algos = j.at("algorithms").get<std::vector<std::string>>();
        a.rmax = j.value("rmax", a.rmax);
        a.time_limit = j.value("time_limit", a.time_limit);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid suite config: ") + e.what());
    }
    return suite;
}

int cmd_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
    if (a.preset.empty() == a.config.empty()) throw UsageError("give exactly one of --preset or --config");
    std::vector<SuiteEntry> suite;
    if (!a.preset.empty()) {
        if (a.preset != "n100") throw UsageError("unknown preset '" + a.preset + "'");
        suite = n100_preset(a.seeds);
    } else {
        suite = suite_from_config(a.config, a);
    }
    if (suite.empty()) throw UsageError("benchmark suite is empty");

    SuiteOptions opts;
    for (const auto& name : a.algos) {
        const auto algo = parse_algorithm(name);
        if (!algo) throw UsageError("unknown algorithm '" + name + "'");
        opts.algorithms.push_back(*algo);
    }
    opts.r_max = a.rmax;
    opts.time_limit_seconds = a.time_limit;
    opts.vns_seed = a.seed;
    opts.per_attribute = a.per_attribute;

    const auto rows = run_suite(suite, opts);
    if (!a.csv.empty()) {
        std::ofstream f(a.csv);
        if (!f) throw DataError("cannot write " + a.csv);
        write_rows_csv(f, rows);
    }
    write_rows_table(out, rows);
    int failures = 0;
    for (const auto& row : rows) {
        if (row.error) {
            ++failures;
            err << "row " << row.instance << " seed " << row.instance_seed << " r2t " << row.r2t << ' '
                << to_string(row.algorithm) << " failed: " << *row.error << '\n';
        }
    }
    return failures ? kSolver : kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goal clustering: fewest groups whose R^2 meets a threshold"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance as CSV");
    gen_cmd->add_option("--dist", gen.dist, "normal or uniform")->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Number of elements")->required();
    gen_cmd->add_option("--m", gen.m, "Number of attributes")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output CSV path")->required();

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a goal clustering instance");
    solve_cmd->add_option("--algo", solve_args.algo, "wards, kmeans, vns-wards or vns-kmeans")->capture_default_str();
    solve_cmd->add_option("--r2t", solve_args.r2t, "R^2 threshold in (0, 1)")->required();
    solve_cmd->add_option("--input", solve_args.input, "Input CSV")->required();
    solve_cmd->add_flag("--standardize", solve_args.standardize, "Z-score every column first");
    solve_cmd->add_option("--rmax", solve_args.rmax, "Largest VNS shake radius")->capture_default_str();
    solve_cmd->add_option("--time-limit", solve_args.time_limit, "VNS wall-clock limit in seconds")->capture_default_str();
    solve_cmd->add_option("--seed", solve_args.seed, "VNS random seed")->capture_default_str();
    solve_cmd->add_option("--report", solve_args.report, "Write a JSON report here");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 12)");
    oracle_cmd->add_option("--input", oracle_args.input, "Input CSV")->required();
    oracle_cmd->add_option("--r2t", oracle_args.r2t, "R^2 threshold in (0, 1)")->required();
    oracle_cmd->add_flag("--standardize", oracle_args.standardize, "Z-score every column first");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
    bench_cmd->add_option("--preset", bench_args.preset, "Built-in suite (n100)");
    bench_cmd->add_option("--config", bench_args.config, "JSON suite description");
    bench_cmd->add_option("--seeds", bench_args.seeds, "Instance seeds per preset instance")->capture_default_str();
    bench_cmd->add_option("--algos", bench_args.algos, "Algorithms to run")->delimiter(',');
    bench_cmd->add_option("--rmax", bench_args.rmax, "Largest VNS shake radius")->capture_default_str();
    bench_cmd->add_option("--time-limit", bench_args.time_limit, "VNS wall-clock limit in seconds")->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed, "VNS random seed")->capture_default_str();
    bench_cmd->add_option("--csv", bench_args.csv, "Write rows as CSV here");
    bench_cmd->add_flag("--per-attribute", bench_args.per_attribute, "Attach per-attribute R^2 to each row");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*solve_cmd) return cmd_solve(solve_args, out, err);
        if (*oracle_cmd) return cmd_oracle(oracle_args, out);
        if (*bench_cmd) return cmd_bench(bench_args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSolver;
    }
    return kUsage;
}

} // namespace gcl
