#ifndef GCL_REPORT_HPP
#define GCL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "goalclust/dataset.hpp"
#include "goalclust/solver.hpp"

namespace gcl {

struct StandardizationRecord {
    bool applied = false;
    std::string denominator = "n-1";
    std::vector<double> means;
    std::vector<double> sds;
    std::vector<goalclust::Index> degenerate_columns;
};

struct SolveReport {
    std::string algorithm;
    std::string input;
    goalclust::Index n = 0;
    goalclust::Index m = 0;
    double r2t = 0.0;
    goalclust::Index k = 0;
    double r2 = 0.0;
    std::vector<double> r2_per_attribute;
    double elapsed_seconds = 0.0;
    bool converged = true;
    std::optional<std::string> termination;
    std::vector<goalclust::Index> assignment;
    std::uint64_t seed = 0;
    StandardizationRecord standardization;
    std::optional<goalclust::VnsTrace> trace;
};

/// Builds the report, re-evaluating R^2 and R^2_j from scratch on `ds`.
SolveReport make_report(const goalclust::Dataset& ds, const goalclust::GcConfig& cfg,
                        const goalclust::SolveResult& result, std::string input);

nlohmann::json to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& j);

} // namespace gcl

#endif // GCL_REPORT_HPP
