#include "goalclust/ward.hpp"

#include <limits>
#include <optional>

#include "goalclust/error.hpp"
#include "goalclust/stats.hpp"

namespace goalclust {

namespace {

// Pair key ordered by (cost, lo, hi); cost is the unnormalised SSB loss.
struct Candidate {
    double cost = std::numeric_limits<double>::infinity();
    Index lo = -1;
    Index hi = -1;

    Index partner_of(Index g) const { return lo == g ? hi : lo; }
};

bool before(const Candidate& x, const Candidate& y) {
    if (x.cost != y.cost) return x.cost < y.cost;
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
}

Candidate make_candidate(const Partition& p, Index g, Index h) {
    return {merge_cost(p, g, h), std::min(g, h), std::max(g, h)};
}

Candidate scan_all_pairs(const Partition& p) {
    Candidate best;
    for (Index a = 0; a < p.num_groups(); ++a)
        for (Index b = a + 1; b < p.num_groups(); ++b) {
            const Candidate c = make_candidate(p, a, b);
            if (before(c, best)) best = c;
        }
    return best;
}

// Caches, for every group, its minimum-cost partner. The global minimum pair is
// the cached best of both its ends, so one O(k) scan finds it.
class NearestNeighborCache {
public:
    explicit NearestNeighborCache(const Partition& p) : best_(static_cast<std::size_t>(p.num_groups())) {
        for (Index g = 0; g < p.num_groups(); ++g) refresh(p, g);
    }

    Candidate global_best() const {
        Candidate best;
        for (const auto& c : best_)
            if (before(c, best)) best = c;
        return best;
    }

    // `p` is the partition after merging a < b; old_last was the highest id before.
    void after_merge(const Partition& p, Index a, Index b, Index old_last) {
        const bool moved = b != old_last;
        if (moved) best_[static_cast<std::size_t>(b)] = best_[static_cast<std::size_t>(old_last)];
        best_.pop_back();

        for (Index g = 0; g < p.num_groups(); ++g) {
            if (g == a || (moved && g == b)) continue;
            auto& cur = best_[static_cast<std::size_t>(g)];
            const Index partner = cur.partner_of(g);
            if (partner == a || partner == b) {
                refresh(p, g);
                continue;
            }
            if (moved && partner == old_last) cur = make_candidate(p, g, b);
            if (const auto c = make_candidate(p, g, a); before(c, cur)) cur = c;
            if (moved) {
                if (const auto c = make_candidate(p, g, b); before(c, cur)) cur = c;
            }
        }
        refresh(p, a);
        if (moved) refresh(p, b);
    }

private:
    void refresh(const Partition& p, Index g) {
        Candidate best;
        for (Index h = 0; h < p.num_groups(); ++h) {
            if (h == g) continue;
            const Candidate c = make_candidate(p, g, h);
            if (before(c, best)) best = c;
        }
        best_[static_cast<std::size_t>(g)] = best;
    }

    std::vector<Candidate> best_;
};

void check_inputs(const Dataset& ds, double r2t) {
    if (!(r2t > 0.0 && r2t < 1.0)) {
        throw UsageError("R^2 threshold must lie strictly between 0 and 1");
    }
    if (!(ds.sst_total() > 0.0)) {
        throw DataError("total sum of squares is zero (all rows identical); R^2 is undefined");
    }
}

Partition agglomerate(const Dataset& ds, Partition p, double r2t, const WardOptions& opts) {
    const double sst = ds.sst_total();
    if (p.num_groups() < 2) return p;

    std::optional<NearestNeighborCache> cache;
    if (opts.selection == PairSelection::NearestNeighbor) cache.emplace(p);

    while (p.num_groups() >= 2) {
        const Candidate next = cache ? cache->global_best() : scan_all_pairs(p);
        if (!meets_threshold((p.cached_ssb() - next.cost) / sst, r2t)) break;
        if (opts.on_merge) opts.on_merge(p, MergeStep{next.lo, next.hi, next.cost / sst});
        const Index old_last = p.num_groups() - 1;
        p.merge(next.lo, next.hi);
        if (cache) cache->after_merge(p, next.lo, next.hi, old_last);
    }
    return p;
}

} // namespace

MergeStep best_merge_exhaustive(const Dataset& ds, const Partition& p) {
    if (p.num_groups() < 2) throw UsageError("need at least two groups to merge");
    const Candidate c = scan_all_pairs(p);
    return {c.lo, c.hi, c.cost / ds.sst_total()};
}

Partition wards_gc(const Dataset& ds, double r2t, const WardOptions& opts) {
    check_inputs(ds, r2t);
    return agglomerate(ds, Partition::singletons(ds), r2t, opts);
}

Partition wards_gc_from(const Dataset& ds, Partition start, double r2t, const WardOptions& opts) {
    check_inputs(ds, r2t);
    if (start.num_elements() != ds.n()) throw UsageError("start partition does not cover this dataset");
    if (!meets_threshold(cached_r2(ds, start), r2t)) {
        throw UsageError("start partition has R^2 below the threshold");
    }
    return agglomerate(ds, std::move(start), r2t, opts);
}

} // namespace goalclust
