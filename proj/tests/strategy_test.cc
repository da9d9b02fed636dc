#include "kings/strategy.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kings/bounds.h"
#include "kings/random.h"

using namespace kings;

namespace {

// Control basis for d = 2 along the Bloch axis midway between x and y.
OrthonormalBasis qubit_midway_control() {
    auto n = BlochDirection::normalized(1, 1, 0);
    return OrthonormalBasis{-1, {spin_up_state(n), spin_up_state(-n)}};
}

double brute_force_best(const std::vector<std::vector<double>> &w) {
    std::vector<int> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1.0;
    do {
        double v = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) v += w[j][static_cast<std::size_t>(perm[j])];
        best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST(assign_greedy, control_equal_to_family_basis_is_identity) {
    for (int d : {2, 3, 4, 5}) {
        auto f = construct_mub(d);
        auto control = f.basis(1);
        auto map = assign_greedy(f, 0, control);
        EXPECT_FALSE(map.covers(0));
        EXPECT_TRUE(map.bijective(1));
        for (int j = 0; j < d; ++j) {
            EXPECT_EQ(map.forward(1, j), j);
            EXPECT_NEAR(born_probability(f.state(1, j), control[static_cast<std::size_t>(j)]), 1.0, 1e-12);
        }
    }
}

TEST(assign_greedy, qubit_midway_control_is_well_conditioned) {
    auto f = construct_mub(2);
    auto control = qubit_midway_control();
    auto map = assign_greedy(f, 0, control);
    EXPECT_TRUE(map.well_conditioned());
    const double expected = (2.0 + std::sqrt(2.0)) / 4.0;
    for (int label : {1, 2}) {
        for (int j = 0; j < 2; ++j) {
            int k = map.forward(label, j);
            EXPECT_NEAR(born_probability(f.state(label, j), control[static_cast<std::size_t>(k)]), expected, 1e-12);
        }
    }
}

TEST(assign_greedy, ties_go_to_lowest_control_index) {
    // Every family state is unbiased against basis 0 used as control.
    auto f = construct_mub(3);
    auto map = assign_greedy(f, 1, f.basis(0));
    for (int label : {2, 3}) {
        for (int j = 0; j < 3; ++j) EXPECT_EQ(map.forward(label, j), 0);
        EXPECT_FALSE(map.bijective(label));
    }
    EXPECT_FALSE(map.well_conditioned());
}

TEST(repair, bijective_input_is_unchanged) {
    auto f = construct_mub(2);
    auto overlaps = overlap_table(f, qubit_midway_control());
    auto raw = assign_greedy(overlaps, {1, 2});
    EXPECT_EQ(repair_well_conditioned(raw, overlaps), raw);
}

TEST(repair, qubit_toy_picks_larger_split) {
    // Basis 1: both states prefer k = 0. Bijection A: (0->0, 1->1) = 0.9 + 0.3;
    // bijection B: (0->1, 1->0) = 0.1 + 0.7. A wins.
    OverlapTable overlaps{{{1, 0}, {0, 1}}, {{0.9, 0.1}, {0.7, 0.3}}};
    AssignmentMap raw(2, {{}, {0, 0}});
    EXPECT_FALSE(raw.well_conditioned());
    auto fixed = repair_well_conditioned(raw, overlaps);
    EXPECT_TRUE(fixed.well_conditioned());
    EXPECT_EQ(fixed.forward_row(1), (std::vector<int>{0, 1}));

    OverlapTable swapped{{{1, 0}, {0, 1}}, {{0.6, 0.4}, {0.9, 0.1}}};
    auto fixed2 = repair_well_conditioned(raw, swapped);
    EXPECT_EQ(fixed2.forward_row(1), (std::vector<int>{1, 0}));
}

TEST(repair_property, matches_brute_force_for_small_d) {
    Rng rng(314);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 2 + static_cast<int>(rng.below(3));
        auto f = construct_mub(d);
        auto overlaps = overlap_table(f, random_basis(static_cast<std::size_t>(d), rng));
        std::vector<int> labels;
        for (int i = 1; i <= d; ++i) labels.push_back(i);
        auto fixed = repair_well_conditioned(assign_greedy(overlaps, labels), overlaps);
        ASSERT_TRUE(fixed.well_conditioned());
        for (int label : labels) {
            const auto &w = overlaps[static_cast<std::size_t>(label)];
            double got = 0.0;
            for (int j = 0; j < d; ++j) got += w[static_cast<std::size_t>(j)][static_cast<std::size_t>(fixed.forward(label, j))];
            EXPECT_NEAR(got, brute_force_best(w), 1e-12);
        }
    }
}

TEST(best_bijection, hungarian_agrees_with_exhaustive_search) {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 9;
        std::vector<std::vector<double>> w(n, std::vector<double>(n));
        for (auto &row : w)
            for (auto &x : row) x = rng.uniform();
        auto perm = best_bijection(w);
        double got = 0.0;
        for (std::size_t j = 0; j < n; ++j) got += w[j][static_cast<std::size_t>(perm[j])];
        EXPECT_NEAR(got, brute_force_best(w), 1e-12);
    }
}

TEST(success_exact, control_on_family_basis) {
    for (int d : {2, 3, 4, 5}) {
        auto f = construct_mub(d);
        auto s = make_strategy(f, 0, 0, f.basis(1));
        double expected = (3.0 * d - 1.0) / (d * (d + 1.0));
        EXPECT_NEAR(success_exact(s).total, expected, 1e-12) << d;
    }
    auto f2 = construct_mub(2);
    EXPECT_NEAR(success_exact(make_strategy(f2, 0, 0, f2.basis(2))).total, 5.0 / 6.0, 1e-12);
}

TEST(success_exact, qubit_optimum) {
    auto f = construct_mub(2);
    auto s = make_strategy(f, 0, 0, qubit_midway_control());
    auto b = success_exact(s);
    double expected = (2.0 * std::sqrt(2.0) + 1.0) / (3.0 * std::sqrt(2.0));
    EXPECT_NEAR(b.total, expected, 1e-12);
    EXPECT_NEAR(b.total, 0.9024, 5e-5);
    EXPECT_NEAR(b.total, bound_p(2), 1e-12);
    EXPECT_NEAR(b.total_regrouped, b.total, 1e-12);
    EXPECT_EQ(b.per_basis.at(0), 1.0);
}

TEST(success_exact, requires_eigenstate_preparation) {
    auto f = construct_mub(2);
    auto s = make_strategy(f, 0, 0, qubit_midway_control());
    s.prep_basis.reset();
    EXPECT_THROW(success_exact(s), std::invalid_argument);
}

TEST(strategy, invalid_inputs) {
    auto f = construct_mub(3);
    Rng rng(1);
    OrthonormalBasis bad{0, {random_state(3, rng), random_state(3, rng), random_state(3, rng)}};
    EXPECT_THROW(make_strategy(f, 0, 0, bad), std::invalid_argument);
    auto s = make_strategy(f, 0, 0, f.basis(2));
    s.preparation = f.state(1, 0);
    EXPECT_THROW(validate(s), std::invalid_argument);
}

TEST(success_general, all_bases_guessed_respects_end_bound) {
    for (int d : {2, 3, 4, 5}) {
        auto f = construct_mub(d);
        std::map<int, int> guesses;
        for (int i = 0; i <= d; ++i) {
            int best = 0;
            for (int j = 1; j < d; ++j)
                if (born_probability(f.state(0, 0), f.state(i, j)) > born_probability(f.state(0, 0), f.state(i, best)))
                    best = j;
            guesses[i] = best;
        }
        GeneralStrategy g{f, f.basis(0), 0, guesses, f.basis(0), AssignmentMap(static_cast<std::size_t>(d), std::vector<std::vector<int>>(f.size()))};
        double v = success_exact_general(g);
        EXPECT_NEAR(v, 2.0 / (d + 1.0), 1e-12);
        EXPECT_LE(v, (1.0 + std::sqrt(static_cast<double>(d))) / (1.0 + d) + 1e-12);
    }
}

TEST(success_general, eigenstate_preparation_reduces_to_exact) {
    Rng rng(77);
    for (int d : {2, 3, 4, 5}) {
        auto f = construct_mub(d);
        auto s = make_strategy(f, 0, 1 % d, random_basis(static_cast<std::size_t>(d), rng));
        EXPECT_NEAR(success_exact_general(to_general(s)), success_exact(s).total, 1e-12);
    }
}

TEST(success_general, partition_violations) {
    auto f = construct_mub(2);
    auto g = to_general(make_strategy(f, 0, 0, qubit_midway_control()));
    auto both = g;
    both.guesses[1] = 0;
    EXPECT_THROW(success_exact_general(both), std::invalid_argument);
    auto neither = g;
    neither.guesses.clear();
    EXPECT_THROW(success_exact_general(neither), std::invalid_argument);
}

TEST(complement, qubit_optimum_exchanged) {
    auto f = construct_mub(2);
    auto s = make_strategy(f, 0, 0, qubit_midway_control());
    auto c = complement_strategy(s);
    EXPECT_EQ(c.guesses.size(), 2u);
    EXPECT_TRUE(c.assignment.covers(0));
    EXPECT_NEAR(success_exact_general(c), (2.0 * std::sqrt(2.0) + 1.0) / (3.0 * std::sqrt(2.0)), 1e-12);
}

TEST(complement, twice_restores_success) {
    Rng rng(8);
    for (int d : {2, 3, 4}) {
        auto f = construct_mub(d);
        auto s = make_strategy(f, 0, 0, random_basis(static_cast<std::size_t>(d), rng));
        auto twice = complement_strategy(complement_strategy(s));
        EXPECT_NEAR(success_exact_general(twice), success_exact(s).total, 1e-9);
    }
}

TEST(strategy_property, signal_weight_bounded_and_regrouping_exact) {
    Rng rng(1234);
    for (int d : {2, 3, 4}) {
        auto f = construct_mub(d);
        const double pd = d * overlap_target(d);
        for (int trial = 0; trial < 300; ++trial) {
            auto s = make_strategy(f, 0, 0, random_basis(static_cast<std::size_t>(d), rng));
            auto b = success_exact(s);
            for (double fk : b.per_signal) EXPECT_LE(fk, pd + 1e-9);
            EXPECT_NEAR(b.total, b.total_regrouped, 1e-12);
            EXPECT_LE(b.total, bound_p(d) + 1e-9);
        }
    }
}

TEST(strategy_property, mixed_preparation_is_no_better) {
    // Success is linear in the density matrix: a mixture of the optimal
    // eigenstate with any other pure state cannot beat the optimum.
    auto f = construct_mub(2);
    auto best = to_general(make_strategy(f, 0, 0, qubit_midway_control()));
    const double optimum = success_exact_general(best);
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto other = best;
        other.preparation_basis = OrthonormalBasis{-1, {random_state(2, rng), StateVector::basis_state(2, 0)}};
        other.preparation_index = 0;
        double w = rng.uniform();
        double mixed = w * optimum + (1 - w) * success_exact_general(other);
        EXPECT_LE(mixed, optimum + 1e-12);
    }
}
