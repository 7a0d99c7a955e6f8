#include "goalclust/stats.hpp"

#include "goalclust/error.hpp"

namespace goalclust {

namespace {

void require_variability(const Dataset& ds) {
    if (!(ds.sst_total() > 0.0)) {
        throw DataError("total sum of squares is zero (all rows identical); R^2 is undefined");
    }
}

void require_group(const Partition& p, Index g) {
    if (g < 0 || g >= p.num_groups()) throw UsageError("group id " + std::to_string(g) + " does not exist");
}

} // namespace

TotalVariability sst(const Dataset& ds) {
    require_variability(ds);
    return {ds.sst_total(), ds.sst_per_attribute()};
}

VarianceSummary evaluate(const Dataset& ds, const Partition& p) {
    require_variability(ds);
    if (p.num_elements() != ds.n()) throw UsageError("partition does not cover this dataset");
    const Index n = ds.n();
    const Index k = p.num_groups();
    const auto& labels = p.assignment();

    // Group means straight from the data, not from the partition's running sums.
    Eigen::MatrixXd means = Eigen::MatrixXd::Zero(ds.m(), k);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
    for (Index i = 0; i < n; ++i) {
        const Index g = labels[static_cast<std::size_t>(i)];
        means.col(g) += ds.row(i).transpose();
        counts(g) += 1.0;
    }
    means.array().rowwise() /= counts.transpose().array();

    VarianceSummary s;
    s.sst = ds.sst_total();
    s.ssb_per_attribute = ((means.colwise() - ds.mean()).array().square().rowwise() * counts.transpose().array()).rowwise().sum();
    s.ssw_per_attribute = Eigen::VectorXd::Zero(ds.m());
    for (Index i = 0; i < n; ++i) {
        s.ssw_per_attribute += (ds.row(i).transpose() - means.col(labels[static_cast<std::size_t>(i)])).array().square().matrix();
    }
    s.ssb = s.ssb_per_attribute.sum();
    s.ssw = s.ssw_per_attribute.sum();
    s.r2 = s.ssb / s.sst;

    const auto& sst_j = ds.sst_per_attribute();
    s.r2_per_attribute = Eigen::VectorXd::Zero(ds.m());
    for (Index j = 0; j < ds.m(); ++j) {
        if (sst_j(j) > 0.0) s.r2_per_attribute(j) = s.ssb_per_attribute(j) / sst_j(j);
    }
    return s;
}

double merge_cost(const Partition& p, Index a, Index b) {
    if (a > b) std::swap(a, b);
    const double sa = static_cast<double>(p.group_size(a));
    const double sb = static_cast<double>(p.group_size(b));
    return sa * sb / (sa + sb) * (p.group_sum(a) / sa - p.group_sum(b) / sb).squaredNorm();
}

double merge_delta(const Dataset& ds, const Partition& p, Index a, Index b) {
    require_variability(ds);
    require_group(p, a);
    require_group(p, b);
    if (a == b) throw UsageError("merge_delta needs two distinct groups");
    return merge_cost(p, a, b) / ds.sst_total();
}

double removal_effect(const Dataset& ds, const Partition& p, Index elem) {
    require_variability(ds);
    if (elem < 0 || elem >= p.num_elements()) throw UsageError("element id out of range");
    const Index g = p.group_of(elem);
    const double size = static_cast<double>(p.group_size(g));
    if (size < 2.0) {
        throw UsageError("element " + std::to_string(elem) + " is alone in its group");
    }
    const double raw = size / (size - 1.0) * (p.group_sum(g) / size - ds.row(elem).transpose()).squaredNorm();
    return raw / ds.sst_total();
}

Partition apply_merge(Partition p, Index a, Index b) {
    p.merge(a, b);
    return p;
}

Partition apply_removal(const Dataset& ds, Partition p, Index elem) {
    p.isolate(ds, elem);
    return p;
}

} // namespace goalclust
