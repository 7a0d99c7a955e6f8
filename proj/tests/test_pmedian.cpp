#include <doctest.h>

#include "goalclust/error.hpp"
#include "goalclust/pmedian.hpp"
#include "oracles.hpp"

using namespace goalclust;

TEST_CASE("1-median and 2-median of (0, 0, 3)") {
    const auto ds = oracle::column({0, 0, 3});
    const auto one = pmedian_greedy(ds, 1);
    CHECK(one.medoids == std::vector<Index>{0});
    CHECK(one.total_cost == doctest::Approx(3.0));

    const auto two = pmedian_greedy(ds, 2);
    CHECK(two.medoids == std::vector<Index>{0, 2});
    CHECK(two.total_cost == doctest::Approx(0.0));
}

TEST_CASE("p = n opens every element") {
    const Dataset ds = generate({Distribution::Normal01, 7, 2, 1});
    const auto sol = pmedian_greedy(ds, 7);
    CHECK(sol.total_cost == 0.0);
    CHECK(sol.candidates.empty());
    std::vector<Index> sorted = sol.medoids;
    std::sort(sorted.begin(), sorted.end());
    for (Index i = 0; i < 7; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    CHECK_THROWS_AS(pmedian_greedy(ds, 0), UsageError);
    CHECK_THROWS_AS(pmedian_greedy(ds, 8), UsageError);
}

TEST_CASE("greedy solution invariants") {
    const Dataset ds = generate({Distribution::UniformNeg1Pos1, 40, 3, 2});
    const auto sol = pmedian_greedy(ds, 5);
    CHECK(sol.medoids.size() == 5);
    std::vector<Index> sorted = sol.medoids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(sol.candidates.size() == 10);
    for (Index c : sol.candidates) CHECK(std::find(sorted.begin(), sorted.end(), c) == sorted.end());
    CHECK(std::abs(sol.total_cost - medoid_cost(ds, sol.medoids)) <= 1e-9 * sol.total_cost);
}

TEST_CASE("local search is bracketed by greedy cost and the exact optimum") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Dataset ds = generate({Distribution::Normal01, 8, 2, seed});
        const auto greedy = pmedian_greedy(ds, 2);
        int swaps = 0;
        const auto improved = pmedian_local_search(ds, greedy, [&](double before, double after) {
            CHECK(after < before);
            ++swaps;
        });
        CHECK(improved.total_cost <= greedy.total_cost + 1e-12);
        CHECK(improved.total_cost >= oracle::best_pmedian_cost(ds, 2) - 1e-9);
        CHECK(std::abs(improved.total_cost - medoid_cost(ds, improved.medoids)) <= 1e-9 * improved.total_cost);
    }
}

TEST_CASE("local search leaves a local optimum unchanged") {
    const Dataset ds = generate({Distribution::Normal01, 30, 2, 6});
    const auto once = pmedian_local_search(ds, pmedian_greedy(ds, 3));
    int swaps = 0;
    const auto twice = pmedian_local_search(ds, once, [&](double, double) { ++swaps; });
    CHECK(swaps == 0);
    CHECK(twice.medoids == once.medoids);

    MedoidSolution empty = once;
    empty.candidates.clear();
    CHECK(pmedian_local_search(ds, empty).medoids == once.medoids);
}
