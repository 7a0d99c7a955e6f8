#include "goalclust/solver.hpp"

#include <chrono>

#include "goalclust/error.hpp"
#include "goalclust/kmeans.hpp"
#include "goalclust/ward.hpp"

namespace goalclust {

std::string to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::Wards: return "wards";
        case Algorithm::Kmeans: return "kmeans";
        case Algorithm::VnsWards: return "vns-wards";
        case Algorithm::VnsKmeans: return "vns-kmeans";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::Wards, Algorithm::Kmeans, Algorithm::VnsWards, Algorithm::VnsKmeans})
        if (to_string(a) == name) return a;
    return std::nullopt;
}

SolveResult solve(const Dataset& ds, const GcConfig& cfg) {
    if (!(cfg.r2t > 0.0 && cfg.r2t < 1.0)) throw UsageError("R^2 threshold must lie strictly between 0 and 1");
    if (!(ds.sst_total() > 0.0)) throw DataError("total sum of squares is zero (all rows identical); R^2 is undefined");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    switch (cfg.algorithm) {
        case Algorithm::Wards: {
            Partition p = wards_gc(ds, cfg.r2t);
            return {std::move(p), elapsed(), true, std::nullopt};
        }
        case Algorithm::Kmeans: {
            KmeansGcResult res = kmeans_gc(ds, cfg.r2t);
            return {std::move(res.partition), elapsed(), res.all_converged, std::nullopt};
        }
        case Algorithm::VnsWards:
        case Algorithm::VnsKmeans: {
            VnsConfig vcfg;
            vcfg.r_max = cfg.r_max;
            vcfg.time_limit_seconds = cfg.time_limit_seconds;
            vcfg.seed = cfg.seed;
            vcfg.starter = cfg.algorithm == Algorithm::VnsWards ? Starter::WardsGC : Starter::KmeansGC;
            VnsResult res = vns_gc(ds, cfg.r2t, vcfg);
            const bool converged = res.trace.starter_converged;
            return {std::move(res.partition), elapsed(), converged, std::move(res.trace)};
        }
    }
    throw SolverError("unknown algorithm");
}

} // namespace goalclust
