#ifndef GOALCLUST_VNS_HPP
#define GOALCLUST_VNS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goalclust/dataset.hpp"
#include "goalclust/partition.hpp"

namespace goalclust {

enum class Starter { WardsGC, KmeansGC };

struct VnsConfig {
    int r_max = 50;
    double time_limit_seconds = 21600.0;
    std::uint64_t seed = 1;
    Starter starter = Starter::WardsGC;
};

enum class Termination { RmaxExhausted, TimeLimit };

std::string to_string(Termination t);

struct HistoryPoint {
    double elapsed_seconds = 0.0;
    Index k = 0;
    double r2 = 0.0;
};

struct VnsTrace {
    int iterations = 0;
    int improvements = 0;
    std::vector<HistoryPoint> best_history;
    Termination termination = Termination::RmaxExhausted;
    Index starter_k = 0;
    double starter_r2 = 0.0;
    /// False when a k-means starter hit its iteration cap.
    bool starter_converged = true;
    int effective_r_max = 0;
};

struct VnsResult {
    Partition partition;
    VnsTrace trace;
};

/// An accepted incumbent must beat the current one's R^2 by more than this on equal k.
inline constexpr double kR2ImprovementSlack = 1e-12;

/**
 * Draws a partition from V_r(p_star): r elements leave their groups as new
 * singletons, no group is emptied. Candidates are all elements of non-singleton
 * groups ranked by removal effect (descending, ties by element id); in each pass
 * the i-th still-eligible candidate is taken when a U(0,1) draw exceeds
 * i / min(n, 2r). After 100 r draws the best remaining candidates are taken.
 */
Partition shake(const Dataset& ds, const Partition& p_star, int r, std::mt19937_64& rng);

/// Basic VNS: starter, then shake + Ward's rebuild from the shaken partition.
VnsResult vns_gc(const Dataset& ds, double r2t, const VnsConfig& cfg);

} // namespace goalclust

#endif // GOALCLUST_VNS_HPP
