#include <gtest/gtest.h>

#include <numeric>

#include "nnatoms/error.hpp"
#include "nnatoms/examples.hpp"
#include "nnatoms/periodicity.hpp"
#include "nnatoms/set_calculus.hpp"

using namespace nnatoms;

namespace {

SupportGraph cycle(std::size_t len) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return SupportGraph::from_edges(len, edges);
}

}  // namespace

TEST(Period, Examples) {
    EXPECT_EQ(period(cycle(2), IndexSet::full(2)), 2u);
    EXPECT_EQ(period(cycle(6), IndexSet::full(6)), 6u);
    auto loop = SupportGraph::from_edges(1, {{0, 0}});
    EXPECT_EQ(period(loop, IndexSet::full(1)), 1u);
    auto zero = SupportGraph::from_edges(2, {{0, 1}});
    EXPECT_THROW(period(zero, IndexSet::of(2, {0})), InputError);
}

TEST(Period, MixedCycleLengths) {
    // Cycles of length 4 and 6 through node 0: period 2.
    auto g = SupportGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 1}});
    EXPECT_EQ(period(g, IndexSet::full(6)), 2u);
    auto h = SupportGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(period(h, IndexSet::full(5)), 1u);
}

TEST(CyclicClasses, TwoCycleSquared) {
    auto cd = cyclic_classes(cycle(2), IndexSet::full(2), 2);
    EXPECT_EQ(cd.d, 2u);
    EXPECT_EQ(cd.classes, (std::vector<IndexSet>{IndexSet::of(2, {0}), IndexSet::of(2, {1})}));
}

TEST(CyclicClasses, FirstPowerIsTrivial) {
    auto cd = cyclic_classes(cycle(5), IndexSet::full(5), 1);
    EXPECT_EQ(cd.d, 1u);
    EXPECT_EQ(cd.classes, std::vector<IndexSet>{IndexSet::full(5)});
}

TEST(CyclicClasses, SixCycleFourthPower) {
    auto cd = cyclic_classes(cycle(6), IndexSet::full(6), 4);
    EXPECT_EQ(cd.d, 2u);
    EXPECT_EQ(cd.classes[0], IndexSet::of(6, {0, 2, 4}));
    EXPECT_EQ(cd.classes[1], IndexSet::of(6, {1, 3, 5}));
}

TEST(CyclicClasses, CountMatchesGcd) {
    for (std::size_t len = 2; len <= 8; ++len) {
        for (std::size_t n = 1; n <= 8; ++n) {
            auto cd = cyclic_classes(cycle(len), IndexSet::full(len), n);
            EXPECT_EQ(cd.d, std::gcd(len, n));
            EXPECT_EQ(power_matrix_atoms(cycle(len), n).size(), std::gcd(len, n));
        }
    }
}

TEST(CyclicClasses, ZeroAtomRejected) {
    auto g = SupportGraph::from_edges(2, {{0, 1}});
    EXPECT_THROW(cyclic_classes(g, IndexSet::of(2, {1}), 2), InputError);
    EXPECT_THROW(cyclic_classes(cycle(3), IndexSet::full(3), 0), InputError);
}

TEST(NA, Examples) {
    EXPECT_EQ(n_A(cycle(4), IndexSet::full(4)), 1u);
    EXPECT_EQ(n_A(cycle(2), IndexSet::of(2, {0})), 2u);
    EXPECT_EQ(n_A(cycle(6), IndexSet::of(6, {3})), 6u);
    EXPECT_THROW(n_A(SupportGraph::from_edges(2, {{0, 1}}), IndexSet::of(2, {0})), InputError);
    EXPECT_THROW(n_A(cycle(3), IndexSet(3)), InputError);
}

TEST(PowerAtoms, Examples) {
    auto sq = power_matrix_atoms(cycle(2), 2);
    EXPECT_EQ(sq.atoms, (std::vector<IndexSet>{IndexSet::of(2, {0}), IndexSet::of(2, {1})}));
    auto fig = SupportGraph::from_matrix(builtin_example("fig-m-graph-6"));
    EXPECT_EQ(power_matrix_atoms(fig, 1).atoms, find_atoms(fig).atoms);

    auto k3 = SupportGraph::from_matrix(builtin_example("kernel-k3-4"));
    auto p2 = power_matrix_atoms(k3, 2);
    const auto half = IndexSet::of(4, {0, 1});
    EXPECT_NE(std::find(p2.atoms.begin(), p2.atoms.end(), half), p2.atoms.end());
    EXPECT_TRUE(is_invariant(k3.power(2), half));
    EXPECT_EQ(find_atoms(k3).size(), 1u);
}
