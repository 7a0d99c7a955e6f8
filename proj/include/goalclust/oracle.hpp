#ifndef GOALCLUST_ORACLE_HPP
#define GOALCLUST_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "goalclust/dataset.hpp"

namespace goalclust {

inline constexpr Index kOracleMaxElements = 12;

/**
 * Visits every set partition of {0..n-1} once, as restricted-growth strings in
 * lexicographic order: labels[0] = 0 and labels[i] <= 1 + max(labels[0..i-1]).
 * The second argument is the number of blocks. Returns the number visited.
 */
std::uint64_t for_each_set_partition(Index n, const std::function<void(std::span<const Index>, Index)>& visit);

struct ClassExtreme {
    double r2 = 0.0;
    std::vector<Index> labels;
};

struct OracleResult {
    Index optimal_k = 0;
    double optimal_r2 = 0.0;
    std::vector<Index> witness;
    /// Indexed by component count i = 1..n; entry 0 is unused.
    std::vector<ClassExtreme> best_per_class;
    std::vector<ClassExtreme> worst_per_class;
    std::uint64_t partitions_enumerated = 0;
};

/// Exact GC optimum by full enumeration. Throws UsageError for n > 12 or r2t outside (0, 1).
OracleResult gc_brute_force(const Dataset& ds, double r2t);

/// A pair of partitions with more components but lower R^2 than the other.
struct NonHierarchicalPair {
    ClassExtreme more_components;
    ClassExtreme fewer_components;
};

/// Searches the per-class extremes of an oracle run for such a pair.
std::optional<NonHierarchicalPair> find_non_hierarchical_pair(const OracleResult& oracle);

} // namespace goalclust

#endif // GOALCLUST_ORACLE_HPP
