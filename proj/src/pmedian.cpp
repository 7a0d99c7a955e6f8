#include "goalclust/pmedian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "goalclust/error.hpp"

namespace goalclust {

namespace {

double distance(const Dataset& ds, Index i, Index j) {
    return (ds.row(i) - ds.row(j)).norm();
}

// Nearest and second-nearest medoid distances of every element.
struct NearestMedoids {
    std::vector<Index> nearest;
    std::vector<double> d1;
    std::vector<double> d2;
    double cost = 0.0;
};

NearestMedoids nearest_medoids(const Dataset& ds, const std::vector<Index>& medoids) {
    const auto n = static_cast<std::size_t>(ds.n());
    NearestMedoids out{std::vector<Index>(n, 0),
                       std::vector<double>(n, std::numeric_limits<double>::infinity()),
                       std::vector<double>(n, std::numeric_limits<double>::infinity()), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < medoids.size(); ++s) {
            // A medoid always belongs to itself, even if another medoid coincides with it.
            const double d = medoids[s] == static_cast<Index>(i) ? -1.0 : distance(ds, static_cast<Index>(i), medoids[s]);
            if (d < out.d1[i]) {
                out.d2[i] = out.d1[i];
                out.d1[i] = d;
                out.nearest[i] = static_cast<Index>(s);
            } else if (d < out.d2[i]) {
                out.d2[i] = d;
            }
        }
        if (out.d1[i] < 0.0) out.d1[i] = 0.0;
        out.cost += out.d1[i];
    }
    return out;
}

void fill_assignment(MedoidSolution& sol, const NearestMedoids& near) {
    sol.assignment = near.nearest;
    sol.total_cost = near.cost;
}

} // namespace

double medoid_cost(const Dataset& ds, const std::vector<Index>& medoids) {
    return nearest_medoids(ds, medoids).cost;
}

MedoidSolution pmedian_greedy(const Dataset& ds, Index p) {
    const Index n = ds.n();
    if (p < 1 || p > n) throw UsageError("p must lie in [1, n]");

    MedoidSolution sol;
    std::vector<char> is_medoid(static_cast<std::size_t>(n), 0);
    std::vector<double> score(static_cast<std::size_t>(n), 0.0);

    // 1-median: smallest total distance to every other element.
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double d = distance(ds, i, j);
            score[static_cast<std::size_t>(i)] += d;
            score[static_cast<std::size_t>(j)] += d;
        }
    Index chosen = static_cast<Index>(std::min_element(score.begin(), score.end()) - score.begin());
    // Lower total distance is better; flip sign so every round ranks by "higher is better".
    for (auto& s : score) s = -s;

    std::vector<double> near(static_cast<std::size_t>(n));
    auto open = [&](Index j) {
        sol.medoids.push_back(j);
        is_medoid[static_cast<std::size_t>(j)] = 1;
        for (Index i = 0; i < n; ++i) {
            const double d = distance(ds, i, j);
            auto& cur = near[static_cast<std::size_t>(i)];
            cur = sol.medoids.size() == 1 ? d : std::min(cur, d);
        }
    };
    open(chosen);

    for (Index round = 1; round < p; ++round) {
        chosen = -1;
        double best_gain = -1.0;
        for (Index j = 0; j < n; ++j) {
            if (is_medoid[static_cast<std::size_t>(j)]) continue;
            double gain = 0.0;
            for (Index i = 0; i < n; ++i) {
                const double cur = near[static_cast<std::size_t>(i)];
                if (cur > 0.0) gain += std::max(0.0, cur - distance(ds, i, j));
            }
            score[static_cast<std::size_t>(j)] = gain;
            if (gain > best_gain) {
                best_gain = gain;
                chosen = j;
            }
        }
        open(chosen);
    }

    // Runners-up of the final round, best first.
    std::vector<Index> rest;
    for (Index j = 0; j < n; ++j)
        if (!is_medoid[static_cast<std::size_t>(j)]) rest.push_back(j);
    std::stable_sort(rest.begin(), rest.end(), [&](Index x, Index y) {
        return score[static_cast<std::size_t>(x)] > score[static_cast<std::size_t>(y)];
    });
    rest.resize(std::min(rest.size(), static_cast<std::size_t>(2 * p)));
    sol.candidates = std::move(rest);

    fill_assignment(sol, nearest_medoids(ds, sol.medoids));
    return sol;
}

MedoidSolution pmedian_local_search(const Dataset& ds, MedoidSolution sol,
                                    const std::function<void(double, double)>& on_swap) {
    if (sol.candidates.empty() || sol.medoids.empty()) return sol;
    const Index n = ds.n();
    const std::size_t p = sol.medoids.size();

    NearestMedoids near = nearest_medoids(ds, sol.medoids);
    std::vector<double> dc(static_cast<std::size_t>(n));
    std::vector<double> removal(p);

    bool improved = true;
    while (improved) {
        improved = false;
        for (auto& cand : sol.candidates) {
            double base = 0.0;
            std::fill(removal.begin(), removal.end(), 0.0);
            for (Index i = 0; i < n; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                dc[ii] = distance(ds, i, cand);
                const double keep = std::min(dc[ii], near.d1[ii]);
                base += keep;
                removal[static_cast<std::size_t>(near.nearest[ii])] += std::min(dc[ii], near.d2[ii]) - keep;
            }
            const auto out = static_cast<std::size_t>(std::min_element(removal.begin(), removal.end()) - removal.begin());
            const double predicted = base + removal[out];
            if (!(predicted < near.cost - 1e-12 * std::max(1.0, near.cost))) continue;

            const double before = near.cost;
            std::swap(sol.medoids[out], cand);
            near = nearest_medoids(ds, sol.medoids);
            if (on_swap) on_swap(before, near.cost);
            improved = true;
        }
    }
    fill_assignment(sol, near);
    return sol;
}

} // namespace goalclust
