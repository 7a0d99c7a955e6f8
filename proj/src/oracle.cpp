#include "goalclust/oracle.hpp"

#include "goalclust/error.hpp"
#include "goalclust/ward.hpp"

namespace goalclust {

std::uint64_t for_each_set_partition(Index n, const std::function<void(std::span<const Index>, Index)>& visit) {
    if (n < 1) return 0;
    const auto size = static_cast<std::size_t>(n);
    std::vector<Index> labels(size, 0);
    std::vector<Index> prefix_max(size, 0);  // max(labels[0..i])
    std::uint64_t count = 0;
    while (true) {
        visit(labels, prefix_max[size - 1] + 1);
        ++count;
        // Rightmost position that may still grow.
        std::size_t i = size - 1;
        while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
        if (i == 0) break;
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < size; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return count;
}

OracleResult gc_brute_force(const Dataset& ds, double r2t) {
    const Index n = ds.n();
    if (n > kOracleMaxElements) {
        throw UsageError("exact enumeration is limited to n <= " + std::to_string(kOracleMaxElements) + " elements");
    }
    if (!(r2t > 0.0 && r2t < 1.0)) throw UsageError("R^2 threshold must lie strictly between 0 and 1");
    if (!(ds.sst_total() > 0.0)) throw DataError("total sum of squares is zero (all rows identical); R^2 is undefined");

    OracleResult out;
    out.best_per_class.assign(static_cast<std::size_t>(n + 1), ClassExtreme{-1.0, {}});
    out.worst_per_class.assign(static_cast<std::size_t>(n + 1), ClassExtreme{2.0, {}});

    Eigen::MatrixXd sums(ds.m(), n);
    Eigen::VectorXd counts(n);
    const double sst = ds.sst_total();
    out.partitions_enumerated = for_each_set_partition(n, [&](std::span<const Index> labels, Index k) {
        sums.leftCols(k).setZero();
        counts.head(k).setZero();
        for (Index i = 0; i < n; ++i) {
            const Index g = labels[static_cast<std::size_t>(i)];
            sums.col(g) += ds.row(i).transpose();
            counts(g) += 1.0;
        }
        double ssb = 0.0;
        for (Index g = 0; g < k; ++g) ssb += counts(g) * (sums.col(g) / counts(g) - ds.mean()).squaredNorm();
        const double r2 = ssb / sst;
        auto& best = out.best_per_class[static_cast<std::size_t>(k)];
        if (r2 > best.r2) best = {r2, {labels.begin(), labels.end()}};
        auto& worst = out.worst_per_class[static_cast<std::size_t>(k)];
        if (r2 < worst.r2) worst = {r2, {labels.begin(), labels.end()}};
    });
    out.best_per_class[0] = {0.0, {}};
    out.worst_per_class[0] = {0.0, {}};

    for (Index k = 1; k <= n; ++k) {
        const auto& best = out.best_per_class[static_cast<std::size_t>(k)];
        if (meets_threshold(best.r2, r2t)) {
            out.optimal_k = k;
            out.optimal_r2 = best.r2;
            out.witness = best.labels;
            break;
        }
    }
    return out;
}

std::optional<NonHierarchicalPair> find_non_hierarchical_pair(const OracleResult& oracle) {
    const auto n = static_cast<Index>(oracle.best_per_class.size()) - 1;
    // Adjacent classes first, then any gap.
    for (Index gap = 1; gap < n; ++gap)
        for (Index fewer = 1; fewer + gap <= n; ++fewer) {
            const auto& lo = oracle.worst_per_class[static_cast<std::size_t>(fewer + gap)];
            const auto& hi = oracle.best_per_class[static_cast<std::size_t>(fewer)];
            if (lo.r2 < hi.r2) return NonHierarchicalPair{lo, hi};
        }
    return std::nullopt;
}

} // namespace goalclust
