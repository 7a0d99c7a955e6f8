#ifndef GOALCLUST_WARD_HPP
#define GOALCLUST_WARD_HPP

#include <functional>

#include "goalclust/dataset.hpp"
#include "goalclust/partition.hpp"

namespace goalclust {

/// R^2 >= threshold is evaluated as r2 >= threshold - kThresholdSlack.
inline constexpr double kThresholdSlack = 1e-12;

inline bool meets_threshold(double r2, double r2t) { return r2 >= r2t - kThresholdSlack; }

/// A merge chosen by Ward's rule: groups a < b, with its R^2 loss.
struct MergeStep {
    Index a = 0;
    Index b = 0;
    double delta = 0.0;
};

enum class PairSelection {
    NearestNeighbor, ///< cached per-group best partner, O(k) per step
    Exhaustive,      ///< full scan of all k(k-1)/2 pairs; reference mode
};

struct WardOptions {
    PairSelection selection = PairSelection::NearestNeighbor;
    /// Called with the partition before each accepted merge.
    std::function<void(const Partition&, const MergeStep&)> on_merge;
};

/// Minimum-loss pair over all pairs, ties broken by lowest (a, b). Requires k >= 2.
MergeStep best_merge_exhaustive(const Dataset& ds, const Partition& p);

/**
 * Agglomerates from all singletons, always taking the merge that loses the
 * least R^2, and returns the last partition whose R^2 still meets r2t.
 */
Partition wards_gc(const Dataset& ds, double r2t, const WardOptions& opts = {});

/// Same loop seeded at `start`; throws UsageError if R^2(start) < r2t.
Partition wards_gc_from(const Dataset& ds, Partition start, double r2t, const WardOptions& opts = {});

} // namespace goalclust

#endif // GOALCLUST_WARD_HPP
