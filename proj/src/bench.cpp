#include "goalclust/bench.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <numeric>
#include <tuple>
#include <ostream>
#include <sstream>

#include "goalclust/error.hpp"
#include "goalclust/stats.hpp"

namespace goalclust {

std::vector<SuiteEntry> n100_preset(int seeds) {
    if (seeds < 1) throw UsageError("need at least one seed");
    std::vector<SuiteEntry> suite;
    for (Index m : {3, 5, 10})
        for (int s = 1; s <= seeds; ++s)
            suite.push_back({InstanceSpec{Distribution::Normal01, 100, m, static_cast<std::uint64_t>(s)}, {0.6, 0.7, 0.8}});
    return suite;
}

std::vector<BenchRow> run_suite(const std::vector<SuiteEntry>& suite, const SuiteOptions& opts) {
    if (suite.empty()) throw UsageError("benchmark suite is empty");
    if (opts.algorithms.empty()) throw UsageError("no algorithms requested");

    std::vector<BenchRow> rows;
    for (const auto& entry : suite) {
        const std::string name = instance_name(entry.instance);
        std::optional<Dataset> ds;
        std::string load_error;
        try {
            ds.emplace(standardize(generate(entry.instance)));
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (double r2t : entry.thresholds)
            for (Algorithm algo : opts.algorithms) {
                BenchRow row;
                row.instance = name;
                row.instance_seed = entry.instance.seed;
                row.r2t = r2t;
                row.algorithm = algo;
                row.seed = opts.vns_seed;
                if (!ds) {
                    row.error = load_error;
                    rows.push_back(std::move(row));
                    continue;
                }
                try {
                    GcConfig cfg{r2t, algo, opts.r_max, opts.time_limit_seconds, opts.vns_seed};
                    SolveResult res = solve(*ds, cfg);
                    row.k = res.partition.num_groups();
                    row.r2 = cached_r2(*ds, res.partition);
                    row.elapsed_seconds = res.elapsed_seconds;
                    if (opts.per_attribute) row.r2_per_attribute = evaluate(*ds, res.partition).r2_per_attribute;
                } catch (const std::exception& e) {
                    row.error = e.what();
                }
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

namespace {

// Shortest text that reads back to the same double.
std::string exact(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,instance_seed,r2t,algorithm,k,r2,elapsed_seconds,seed,r2_per_attribute,error\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.instance_seed << ',' << exact(row.r2t) << ',' << to_string(row.algorithm) << ',';
        if (row.error) {
            out << ",,,";
        } else {
            out << row.k << ',' << exact(row.r2) << ',' << exact(row.elapsed_seconds) << ',';
        }
        out << row.seed << ',';
        if (row.r2_per_attribute) {
            for (Index j = 0; j < row.r2_per_attribute->size(); ++j) out << (j ? ";" : "") << exact((*row.r2_per_attribute)(j));
        }
        out << ',';
        if (row.error) {
            std::string msg = *row.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            out << msg;
        }
        out << '\n';
    }
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string format_k(double k) {
    return k == static_cast<double>(static_cast<long>(k)) ? std::to_string(static_cast<long>(k)) : fixed(k, 1);
}

} // namespace

void write_rows_table(std::ostream& out, const std::vector<BenchRow>& rows) {
    std::vector<Algorithm> algos;
    std::vector<std::pair<std::string, double>> keys;
    struct Cell {
        std::vector<double> k, r2, time;
        int failures = 0;
    };
    std::map<std::tuple<std::string, double, Algorithm>, Cell> cells;
    for (const auto& row : rows) {
        if (std::find(algos.begin(), algos.end(), row.algorithm) == algos.end()) algos.push_back(row.algorithm);
        const auto key = std::make_pair(row.instance, row.r2t);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        auto& cell = cells[{row.instance, row.r2t, row.algorithm}];
        if (row.error) {
            ++cell.failures;
            continue;
        }
        cell.k.push_back(static_cast<double>(row.k));
        cell.r2.push_back(row.r2);
        cell.time.push_back(row.elapsed_seconds);
    }

    constexpr int kName = 12, kNum = 8;
    out << std::left << std::setw(kName) << "" << std::setw(6) << "";
    for (auto a : algos) out << "| " << std::setw(3 * kNum) << to_string(a);
    out << '\n' << std::setw(kName) << "Instance" << std::setw(6) << "R2T";
    for (std::size_t i = 0; i < algos.size(); ++i)
        out << "| " << std::setw(kNum) << "c(P)" << std::setw(kNum) << "R2(P)" << std::setw(kNum) << "time";
    out << '\n' << std::string(kName + 6 + algos.size() * (3 * kNum + 2), '-') << '\n';

    for (const auto& [instance, r2t] : keys) {
        out << std::setw(kName) << instance << std::setw(6) << fixed(r2t, 2);
        for (auto a : algos) {
            const auto it = cells.find({instance, r2t, a});
            out << "| ";
            if (it == cells.end() || it->second.k.empty()) {
                out << std::setw(3 * kNum) << (it == cells.end() ? "" : "failed");
                continue;
            }
            const auto& c = it->second;
            const double mean_time = std::accumulate(c.time.begin(), c.time.end(), 0.0) / static_cast<double>(c.time.size());
            out << std::setw(kNum) << format_k(median(c.k)) << std::setw(kNum) << fixed(median(c.r2), 3)
                << std::setw(kNum) << (mean_time < 1.0 ? std::string("<1") : fixed(mean_time, 0));
        }
        out << '\n';
    }
}

} // namespace goalclust
