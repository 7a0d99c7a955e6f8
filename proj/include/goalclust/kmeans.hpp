#ifndef GOALCLUST_KMEANS_HPP
#define GOALCLUST_KMEANS_HPP

#include <functional>

#include "goalclust/dataset.hpp"
#include "goalclust/partition.hpp"
#include "goalclust/pmedian.hpp"

namespace goalclust {

inline constexpr int kKmeansMaxIterations = 999;

struct KmeansResult {
    Partition partition;
    int iterations = 0;
    bool converged = false;
};

struct KmeansOptions {
    int max_iterations = kKmeansMaxIterations;
    /// Called with the SSW after the initial partition and after every pass.
    std::function<void(double)> on_pass;
};

/// Partition induced by assigning every element to its nearest medoid.
Partition partition_from_medoids(const Dataset& ds, const MedoidSolution& sol);

/**
 * Lloyd iterations with Euclidean closeness: reassign every element to its
 * nearest centroid (keeping the current group on ties), then recompute the
 * centroids, until a pass moves nothing. A group that empties is reseeded with
 * the element farthest from its own centroid.
 */
KmeansResult kmeans(const Dataset& ds, const Partition& init, const KmeansOptions& opts = {});

/// k-means at k groups started from the greedy + local-search p-median.
KmeansResult kmeans_probe(const Dataset& ds, Index k);

struct KmeansGcResult {
    Partition partition;
    int probes = 0;
    bool all_converged = true;
};

/**
 * Bisection over the number of groups. The bracket [a, b] starts at [1, n]
 * with the analytic single-group and all-singletons partitions, and keeps
 * R^2(P_a) < r2t <= R^2(P_b). Returns the partition stored for b.
 */
KmeansGcResult kmeans_gc(const Dataset& ds, double r2t);

} // namespace goalclust

#endif // GOALCLUST_KMEANS_HPP
