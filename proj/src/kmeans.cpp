#include "goalclust/kmeans.hpp"

#include "goalclust/error.hpp"
#include "goalclust/ward.hpp"

namespace goalclust {

namespace {

struct Centroids {
    Eigen::MatrixXd sums;   // m x k
    std::vector<Index> counts;

    Eigen::VectorXd center(Index g) const { return sums.col(g) / static_cast<double>(counts[static_cast<std::size_t>(g)]); }
};

Centroids accumulate(const Dataset& ds, const std::vector<Index>& labels, Index k) {
    Centroids c{Eigen::MatrixXd::Zero(ds.m(), k), std::vector<Index>(static_cast<std::size_t>(k), 0)};
    for (Index i = 0; i < ds.n(); ++i) {
        const Index g = labels[static_cast<std::size_t>(i)];
        c.sums.col(g) += ds.row(i).transpose();
        ++c.counts[static_cast<std::size_t>(g)];
    }
    return c;
}

Eigen::MatrixXd centers_of(const Centroids& c) {
    Eigen::MatrixXd centers(c.sums.rows(), c.sums.cols());
    for (Index g = 0; g < c.sums.cols(); ++g) centers.col(g) = c.center(g);
    return centers;
}

double within_ss(const Dataset& ds, const std::vector<Index>& labels, const Eigen::MatrixXd& centers) {
    double ssw = 0.0;
    for (Index i = 0; i < ds.n(); ++i) ssw += (ds.row(i).transpose() - centers.col(labels[static_cast<std::size_t>(i)])).squaredNorm();
    return ssw;
}

// Fills every empty group with the element farthest from its own centroid.
void repair_empty(const Dataset& ds, std::vector<Index>& labels, Centroids& c) {
    const Index k = c.sums.cols();
    for (Index e = 0; e < k; ++e) {
        if (c.counts[static_cast<std::size_t>(e)] > 0) continue;
        Index far = -1;
        double far_d = -1.0;
        for (Index i = 0; i < ds.n(); ++i) {
            const Index g = labels[static_cast<std::size_t>(i)];
            if (c.counts[static_cast<std::size_t>(g)] < 2) continue;
            const double d = (ds.row(i).transpose() - c.center(g)).squaredNorm();
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        const Index from = labels[static_cast<std::size_t>(far)];
        labels[static_cast<std::size_t>(far)] = e;
        c.sums.col(from) -= ds.row(far).transpose();
        c.sums.col(e) = ds.row(far).transpose();
        --c.counts[static_cast<std::size_t>(from)];
        c.counts[static_cast<std::size_t>(e)] = 1;
    }
}

} // namespace

Partition partition_from_medoids(const Dataset& ds, const MedoidSolution& sol) {
    return Partition::from_labels(ds, sol.assignment);
}

KmeansResult kmeans(const Dataset& ds, const Partition& init, const KmeansOptions& opts) {
    if (init.num_elements() != ds.n()) throw UsageError("initial partition does not cover this dataset");
    const Index k = init.num_groups();
    std::vector<Index> labels = init.assignment();
    Eigen::MatrixXd centers = centers_of(accumulate(ds, labels, k));
    if (opts.on_pass) opts.on_pass(within_ss(ds, labels, centers));

    int iterations = 0;
    bool converged = false;
    while (iterations < opts.max_iterations) {
        ++iterations;
        Index moved = 0;
        for (Index i = 0; i < ds.n(); ++i) {
            auto& label = labels[static_cast<std::size_t>(i)];
            const auto x = ds.row(i).transpose();
            Index best = label;
            double best_d = (x - centers.col(label)).squaredNorm();
            for (Index g = 0; g < k; ++g) {
                const double d = (x - centers.col(g)).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = g;
                }
            }
            if (best != label) {
                label = best;
                ++moved;
            }
        }
        if (moved == 0) {
            converged = true;
            break;
        }
        Centroids c = accumulate(ds, labels, k);
        repair_empty(ds, labels, c);
        centers = centers_of(c);
        if (opts.on_pass) opts.on_pass(within_ss(ds, labels, centers));
    }
    return {Partition::from_labels(ds, labels), iterations, converged};
}

KmeansResult kmeans_probe(const Dataset& ds, Index k) {
    const MedoidSolution medoids = pmedian_local_search(ds, pmedian_greedy(ds, k));
    return kmeans(ds, partition_from_medoids(ds, medoids));
}

KmeansGcResult kmeans_gc(const Dataset& ds, double r2t) {
    if (!(r2t > 0.0 && r2t < 1.0)) throw UsageError("R^2 threshold must lie strictly between 0 and 1");
    if (!(ds.sst_total() > 0.0)) throw DataError("total sum of squares is zero (all rows identical); R^2 is undefined");

    Index a = 1;
    Index b = ds.n();
    KmeansGcResult out{Partition::singletons(ds), 0, true};
    while (b - a >= 2) {
        const Index c = (a + b) / 2;
        KmeansResult probe = kmeans_probe(ds, c);
        ++out.probes;
        out.all_converged = out.all_converged && probe.converged;
        if (meets_threshold(cached_r2(ds, probe.partition), r2t)) {
            b = c;
            out.partition = std::move(probe.partition);
        } else {
            a = c;
        }
    }
    return out;
}

} // namespace goalclust
