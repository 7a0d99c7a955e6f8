#include "goalclust/vns.hpp"

#include <algorithm>
#include <chrono>

#include "goalclust/error.hpp"
#include "goalclust/kmeans.hpp"
#include "goalclust/stats.hpp"
#include "goalclust/ward.hpp"

namespace goalclust {

std::string to_string(Termination t) {
    return t == Termination::RmaxExhausted ? "rmax-exhausted" : "time-limit";
}

Partition shake(const Dataset& ds, const Partition& p_star, int r, std::mt19937_64& rng) {
    const Index n = ds.n();
    if (r < 1 || r > n - p_star.num_groups()) {
        throw UsageError("shake radius must satisfy 1 <= r <= n - k");
    }

    struct Candidate {
        Index elem;
        double effect;
    };
    std::vector<Candidate> ranked;
    for (Index e = 0; e < n; ++e) {
        if (p_star.group_size(p_star.group_of(e)) >= 2) ranked.push_back({e, removal_effect(ds, p_star, e)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Candidate& x, const Candidate& y) { return x.effect > y.effect; });

    std::vector<Index> remaining(static_cast<std::size_t>(p_star.num_groups()));
    for (Index g = 0; g < p_star.num_groups(); ++g) remaining[static_cast<std::size_t>(g)] = p_star.group_size(g);
    std::vector<char> taken(ranked.size(), 0);
    std::vector<Index> chosen;
    chosen.reserve(static_cast<std::size_t>(r));

    auto eligible = [&](std::size_t c) {
        return !taken[c] && remaining[static_cast<std::size_t>(p_star.group_of(ranked[c].elem))] >= 2;
    };
    auto take = [&](std::size_t c) {
        taken[c] = 1;
        --remaining[static_cast<std::size_t>(p_star.group_of(ranked[c].elem))];
        chosen.push_back(ranked[c].elem);
    };

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double scale = static_cast<double>(std::min<Index>(n, 2 * static_cast<Index>(r)));
    const long draw_cap = 100L * r;
    long draws = 0;
    while (static_cast<int>(chosen.size()) < r && draws < draw_cap) {
        Index position = 0;
        bool any = false;
        for (std::size_t c = 0; c < ranked.size() && static_cast<int>(chosen.size()) < r && draws < draw_cap; ++c) {
            if (!eligible(c)) continue;
            any = true;
            ++position;
            // Positions at or beyond the scale can never be selected.
            if (static_cast<double>(position) >= scale) break;
            ++draws;
            if (unit(rng) > static_cast<double>(position) / scale) take(c);
        }
        if (!any) break;
    }
    for (std::size_t c = 0; c < ranked.size() && static_cast<int>(chosen.size()) < r; ++c) {
        if (eligible(c)) take(c);
    }
    if (static_cast<int>(chosen.size()) < r) {
        throw SolverError("not enough removable elements for shake radius " + std::to_string(r));
    }

    Partition out = p_star;
    for (Index e : chosen) out.isolate(ds, e);
    return out;
}

VnsResult vns_gc(const Dataset& ds, double r2t, const VnsConfig& cfg) {
    if (!(r2t > 0.0 && r2t < 1.0)) throw UsageError("R^2 threshold must lie strictly between 0 and 1");
    if (cfg.r_max < 1) throw UsageError("r_max must be at least 1");
    if (!(cfg.time_limit_seconds > 0.0)) throw UsageError("time limit must be positive");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    VnsTrace trace;
    Partition best = Partition::single_group(ds);
    if (cfg.starter == Starter::WardsGC) {
        best = wards_gc(ds, r2t);
    } else {
        KmeansGcResult start_result = kmeans_gc(ds, r2t);
        best = std::move(start_result.partition);
        trace.starter_converged = start_result.all_converged;
    }
    trace.starter_k = best.num_groups();
    trace.starter_r2 = cached_r2(ds, best);
    trace.best_history.push_back({elapsed(), best.num_groups(), trace.starter_r2});

    auto radius_bound = [&] {
        return static_cast<int>(std::min<Index>(cfg.r_max, ds.n() - best.num_groups() - 1));
    };
    int r_max = radius_bound();
    trace.effective_r_max = r_max;

    std::mt19937_64 rng(cfg.seed);
    int r = 1;
    while (r <= r_max) {
        if (elapsed() >= cfg.time_limit_seconds) {
            trace.termination = Termination::TimeLimit;
            break;
        }
        Partition rebuilt = wards_gc_from(ds, shake(ds, best, r, rng), r2t);
        ++trace.iterations;
        const bool fewer = rebuilt.num_groups() < best.num_groups();
        const bool tighter = rebuilt.num_groups() == best.num_groups() &&
                             cached_r2(ds, rebuilt) > cached_r2(ds, best) + kR2ImprovementSlack;
        if (fewer || tighter) {
            best = std::move(rebuilt);
            ++trace.improvements;
            trace.best_history.push_back({elapsed(), best.num_groups(), cached_r2(ds, best)});
            r = 1;
            r_max = radius_bound();
        } else {
            ++r;
        }
    }
    return {std::move(best), std::move(trace)};
}

} // namespace goalclust
