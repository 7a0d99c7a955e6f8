#ifndef GOALCLUST_STATS_HPP
#define GOALCLUST_STATS_HPP

#include <Eigen/Dense>

#include "goalclust/dataset.hpp"
#include "goalclust/partition.hpp"

namespace goalclust {

struct TotalVariability {
    double total = 0.0;
    Eigen::VectorXd per_attribute;
};

struct VarianceSummary {
    double sst = 0.0;
    double ssb = 0.0;
    double ssw = 0.0;
    double r2 = 0.0;
    Eigen::VectorXd r2_per_attribute;
    Eigen::VectorXd ssb_per_attribute;
    Eigen::VectorXd ssw_per_attribute;
};

/// Throws DataError when SST is zero (all rows identical), since R^2 is then undefined.
TotalVariability sst(const Dataset& ds);

/**
 * From-scratch evaluation of a partition: SSB_j from the group means, SSW_j as
 * the squared deviations from each element's group mean, R^2 = SSB/SST and
 * R^2_j = SSB_j/SST_j. Degenerate attributes (SST_j = 0) report R^2_j = 0.
 */
VarianceSummary evaluate(const Dataset& ds, const Partition& p);

/// |A||B|/(|A|+|B|) * ||centroid_A - centroid_B||^2, i.e. the SSB lost by merging.
double merge_cost(const Partition& p, Index a, Index b);

/// Exact drop R^2(P) - R^2(P with a and b merged).
double merge_delta(const Dataset& ds, const Partition& p, Index a, Index b);

/// Exact R^2 gain from moving elem into a new singleton:
/// (1/SST) * |A|/(|A|-1) * ||centroid_A - x_elem||^2. Throws UsageError for singletons.
double removal_effect(const Dataset& ds, const Partition& p, Index elem);

Partition apply_merge(Partition p, Index a, Index b);
Partition apply_removal(const Dataset& ds, Partition p, Index elem);

} // namespace goalclust

#endif // GOALCLUST_STATS_HPP
