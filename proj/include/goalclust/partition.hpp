#ifndef GOALCLUST_PARTITION_HPP
#define GOALCLUST_PARTITION_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "goalclust/dataset.hpp"

namespace goalclust {

/// One group's size and per-attribute sums; the centroid is sum / size.
struct GroupStats {
    Index size = 0;
    Eigen::VectorXd attr_sums;

    Eigen::VectorXd centroid() const { return attr_sums / static_cast<double>(size); }
};

/**
 * Assignment of the n elements of a dataset to k non-empty groups with dense
 * ids 0..k-1, plus the incremental statistics (size, attribute sums) of each
 * group and a running between-groups sum of squares.
 *
 * Merging groups a and b keeps the merged group at id min(a, b); the group
 * with the last id k-1 is then relabelled into the vacated slot max(a, b).
 * Isolating an element appends a new singleton group with id k.
 *
 * The cached SSB is refreshed from the group statistics every 4096
 * incremental updates.
 */
class Partition {
public:
    static Partition singletons(const Dataset& ds);
    static Partition single_group(const Dataset& ds);
    /// Arbitrary integer labels; ids are densified in order of first appearance.
    static Partition from_labels(const Dataset& ds, std::span<const Index> labels);

    Index num_elements() const { return static_cast<Index>(assignment_.size()); }
    Index num_groups() const { return k_; }
    Index num_attributes() const { return sums_.rows(); }

    Index group_of(Index elem) const { return assignment_[static_cast<std::size_t>(elem)]; }
    const std::vector<Index>& assignment() const { return assignment_; }

    Index group_size(Index g) const { return static_cast<Index>(members_[static_cast<std::size_t>(g)].size()); }
    auto group_sum(Index g) const { return sums_.col(g); }
    Eigen::VectorXd centroid(Index g) const { return sums_.col(g) / static_cast<double>(group_size(g)); }
    GroupStats group(Index g) const { return {group_size(g), sums_.col(g)}; }
    std::span<const Index> members(Index g) const { return members_[static_cast<std::size_t>(g)]; }

    /// Running SSB (sum_q |Q_q| * ||centroid_q - grand mean||^2).
    double cached_ssb() const { return ssb_; }
    /// SSB recomputed from the group statistics.
    double recompute_ssb() const;

    /// Merges groups a and b in place. Returns the decrease in SSB.
    double merge(Index a, Index b);
    /// Moves elem into a new singleton group in place. Returns the increase in SSB.
    /// Throws UsageError if elem is already alone in its group.
    double isolate(const Dataset& ds, Index elem);

    /// True if both partitions group the elements identically (labels may differ).
    bool same_grouping(const Partition& other) const;

private:
    Partition(const Dataset& ds, std::vector<Index> dense_labels, Index k);
    void note_update();

    Eigen::MatrixXd sums_;      // m x capacity, column g holds group g
    Eigen::VectorXd grand_mean_;
    std::vector<std::vector<Index>> members_;
    std::vector<Index> assignment_;
    Index k_ = 0;
    double ssb_ = 0.0;
    double scale_ = 1.0;        // SST, for drift tolerance
    int updates_since_refresh_ = 0;
};

/// SST-normalised cached R^2 of a partition.
inline double cached_r2(const Dataset& ds, const Partition& p) { return p.cached_ssb() / ds.sst_total(); }

} // namespace goalclust

#endif // GOALCLUST_PARTITION_HPP
