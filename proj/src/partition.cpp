#include "goalclust/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "goalclust/error.hpp"

namespace goalclust {

namespace {
constexpr int kRefreshInterval = 4096;
constexpr double kDriftTolerance = 1e-9;
} // namespace

Partition::Partition(const Dataset& ds, std::vector<Index> dense_labels, Index k)
    : sums_(Eigen::MatrixXd::Zero(ds.m(), ds.n())),
      grand_mean_(ds.mean()),
      members_(static_cast<std::size_t>(k)),
      assignment_(std::move(dense_labels)),
      k_(k),
      scale_(std::max(ds.sst_total(), 1.0)) {
    for (Index i = 0; i < ds.n(); ++i) {
        const Index g = assignment_[static_cast<std::size_t>(i)];
        sums_.col(g) += ds.row(i).transpose();
        members_[static_cast<std::size_t>(g)].push_back(i);
    }
    ssb_ = recompute_ssb();
}

Partition Partition::singletons(const Dataset& ds) {
    std::vector<Index> labels(static_cast<std::size_t>(ds.n()));
    for (Index i = 0; i < ds.n(); ++i) labels[static_cast<std::size_t>(i)] = i;
    return Partition(ds, std::move(labels), ds.n());
}

Partition Partition::single_group(const Dataset& ds) {
    return Partition(ds, std::vector<Index>(static_cast<std::size_t>(ds.n()), 0), 1);
}

Partition Partition::from_labels(const Dataset& ds, std::span<const Index> labels) {
    if (static_cast<Index>(labels.size()) != ds.n()) {
        throw UsageError("label count " + std::to_string(labels.size()) + " does not match n = " + std::to_string(ds.n()));
    }
    std::unordered_map<Index, Index> dense;
    std::vector<Index> out;
    out.reserve(labels.size());
    for (Index label : labels) {
        const auto [it, inserted] = dense.try_emplace(label, static_cast<Index>(dense.size()));
        out.push_back(it->second);
    }
    const auto k = static_cast<Index>(dense.size());
    return Partition(ds, std::move(out), k);
}

double Partition::recompute_ssb() const {
    double ssb = 0.0;
    for (Index g = 0; g < k_; ++g) {
        const double size = static_cast<double>(group_size(g));
        ssb += size * (sums_.col(g) / size - grand_mean_).squaredNorm();
    }
    return ssb;
}

void Partition::note_update() {
    if (++updates_since_refresh_ < kRefreshInterval) return;
    updates_since_refresh_ = 0;
    const double fresh = recompute_ssb();
    if (std::abs(fresh - ssb_) > kDriftTolerance * scale_) {
        throw std::logic_error("cached SSB drifted from its recomputed value");
    }
    ssb_ = fresh;
}

double Partition::merge(Index a, Index b) {
    if (a == b || a < 0 || b < 0 || a >= k_ || b >= k_) {
        throw UsageError("merge needs two distinct existing groups");
    }
    if (a > b) std::swap(a, b);
    const double sa = static_cast<double>(group_size(a));
    const double sb = static_cast<double>(group_size(b));
    const double loss = sa * sb / (sa + sb) * (sums_.col(a) / sa - sums_.col(b) / sb).squaredNorm();

    auto& into = members_[static_cast<std::size_t>(a)];
    auto& from = members_[static_cast<std::size_t>(b)];
    for (Index e : from) assignment_[static_cast<std::size_t>(e)] = a;
    into.insert(into.end(), from.begin(), from.end());
    sums_.col(a) += sums_.col(b);

    const Index last = k_ - 1;
    if (b != last) {
        members_[static_cast<std::size_t>(b)] = std::move(members_[static_cast<std::size_t>(last)]);
        for (Index e : members_[static_cast<std::size_t>(b)]) assignment_[static_cast<std::size_t>(e)] = b;
        sums_.col(b) = sums_.col(last);
    }
    members_.pop_back();
    sums_.col(last).setZero();
    --k_;

    ssb_ -= loss;
    note_update();
    return loss;
}

double Partition::isolate(const Dataset& ds, Index elem) {
    if (elem < 0 || elem >= num_elements()) throw UsageError("element id out of range");
    const Index g = group_of(elem);
    auto& group = members_[static_cast<std::size_t>(g)];
    if (group.size() < 2) {
        throw UsageError("element " + std::to_string(elem) + " is alone in its group and cannot be isolated");
    }
    const double size = static_cast<double>(group.size());
    const auto x = ds.row(elem).transpose();
    const double gain = size / (size - 1.0) * (sums_.col(g) / size - x).squaredNorm();

    group.erase(std::find(group.begin(), group.end(), elem));
    sums_.col(g) -= x;
    sums_.col(k_) = x;
    members_.push_back({elem});
    assignment_[static_cast<std::size_t>(elem)] = k_;
    ++k_;

    ssb_ += gain;
    note_update();
    return gain;
}

bool Partition::same_grouping(const Partition& other) const {
    if (other.num_elements() != num_elements() || other.k_ != k_) return false;
    std::vector<Index> map(static_cast<std::size_t>(k_), -1);
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        Index& target = map[static_cast<std::size_t>(assignment_[i])];
        if (target < 0) target = other.assignment_[i];
        else if (target != other.assignment_[i]) return false;
    }
    return true;
}

} // namespace goalclust
