#ifndef GOALCLUST_SOLVER_HPP
#define GOALCLUST_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "goalclust/dataset.hpp"
#include "goalclust/partition.hpp"
#include "goalclust/vns.hpp"

namespace goalclust {

enum class Algorithm { Wards, Kmeans, VnsWards, VnsKmeans };

/// "wards", "kmeans", "vns-wards", "vns-kmeans".
std::string to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct GcConfig {
    double r2t = 0.6;
    Algorithm algorithm = Algorithm::Wards;
    int r_max = 50;
    double time_limit_seconds = 21600.0;
    std::uint64_t seed = 1;
};

struct SolveResult {
    Partition partition;
    double elapsed_seconds = 0.0;
    /// False when any k-means run hit its iteration cap.
    bool converged = true;
    std::optional<VnsTrace> trace;
};

/// Validates 0 < r2t < 1 and the dataset, then runs the configured algorithm.
SolveResult solve(const Dataset& ds, const GcConfig& cfg);

} // namespace goalclust

#endif // GOALCLUST_SOLVER_HPP
