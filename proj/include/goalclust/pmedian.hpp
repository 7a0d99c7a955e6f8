#ifndef GOALCLUST_PMEDIAN_HPP
#define GOALCLUST_PMEDIAN_HPP

#include <functional>
#include <vector>

#include "goalclust/dataset.hpp"

namespace goalclust {

/// Euclidean p-median (k-medoids) solution.
struct MedoidSolution {
    std::vector<Index> medoids;
    /// Position in `medoids` of each element's nearest medoid.
    std::vector<Index> assignment;
    double total_cost = 0.0;
    /// Non-medoid elements available for swaps, best-scored first.
    std::vector<Index> candidates;
};

/// Sum of distances to the nearest medoid, recomputed from scratch.
double medoid_cost(const Dataset& ds, const std::vector<Index>& medoids);

/**
 * Greedy construction: the 1-median first, then each round opens the element
 * with the largest cost reduction. The candidate list keeps the top 2p
 * runners-up of the final round.
 */
MedoidSolution pmedian_greedy(const Dataset& ds, Index p);

/// Swap local search between medoids and candidates; a swap is kept only if the cost strictly drops.
/// on_swap receives the cost before and after every accepted swap.
MedoidSolution pmedian_local_search(const Dataset& ds, MedoidSolution sol,
                                    const std::function<void(double, double)>& on_swap = {});

} // namespace goalclust

#endif // GOALCLUST_PMEDIAN_HPP
