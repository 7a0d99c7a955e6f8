#ifndef GOALCLUST_BENCH_HPP
#define GOALCLUST_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "goalclust/dataset.hpp"
#include "goalclust/solver.hpp"

namespace goalclust {

struct SuiteEntry {
    InstanceSpec instance;
    std::vector<double> thresholds;
};

struct SuiteOptions {
    std::vector<Algorithm> algorithms;
    int r_max = 50;
    double time_limit_seconds = 21600.0;
    std::uint64_t vns_seed = 1;
    bool per_attribute = false;
};

struct BenchRow {
    std::string instance;
    std::uint64_t instance_seed = 0;
    double r2t = 0.0;
    Algorithm algorithm = Algorithm::Wards;
    Index k = 0;
    double r2 = 0.0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    std::optional<Eigen::VectorXd> r2_per_attribute;
    /// Set when the solver threw; the numeric fields are then meaningless.
    std::optional<std::string> error;
};

/// The N-100-{3,5,10} grid at thresholds 0.6, 0.7, 0.8 with instance seeds 1..seeds.
std::vector<SuiteEntry> n100_preset(int seeds);

/// Generates, standardizes and solves every (instance, threshold, algorithm) in input order.
std::vector<BenchRow> run_suite(const std::vector<SuiteEntry>& suite, const SuiteOptions& opts);

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Aligned text table: one line per (instance, r2t) with a {c(P), R^2(P), time} block per
/// algorithm. Several seeds of one instance are summarised by the median c(P) and R^2,
/// and the mean time.
void write_rows_table(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace goalclust

#endif // GOALCLUST_BENCH_HPP
