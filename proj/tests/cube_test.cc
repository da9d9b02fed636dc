#include "kings/cube.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "kings/reference.h"

using namespace kings;

namespace {

const double kTheta = std::acos(1.0 / std::sqrt(3.0));

}  // namespace

TEST(cube, setup_invariants) {
    auto s = make_cube_setup();
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            EXPECT_NEAR(std::abs(s.diagonals[static_cast<std::size_t>(a)].dot(s.diagonals[static_cast<std::size_t>(b)])), 1.0 / 3.0, 1e-15);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            EXPECT_NEAR(std::abs(inner(s.vaa[j], s.vaa[k]) - (j == k ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(cube, bell_state_decompositions) {
    auto s = make_cube_setup();
    auto report = verify_bell_decompositions(s);
    EXPECT_TRUE(report.passed);
    for (double ov : report.ray_overlap) EXPECT_NEAR(ov, 1.0, 1e-10);
    // n_1 paired with n_2 is not a decomposition at all.
    double wrong = bell_pairing_overlap(s, 0, 1);
    EXPECT_LT(wrong, 1e-10);
}

TEST(cube, king_collapse) {
    auto s = make_cube_setup();
    auto up = king_collapse(s, 0, 1);
    auto expected = tensor(spin_up_state(s.diagonals[0]), spin_up_state(s.diagonals[3]));
    EXPECT_TRUE(same_ray(up, expected));
    for (int a = 0; a < 4; ++a) {
        auto plus = king_collapse(s, a, 1);
        auto minus = king_collapse(s, a, -1);
        EXPECT_NEAR(born_probability(s.bell, plus), 0.5, 1e-12);
        EXPECT_NEAR(born_probability(s.bell, minus), 0.5, 1e-12);
        EXPECT_LT(std::abs(inner(plus, minus)), 1e-12);
    }
    EXPECT_THROW(king_collapse(s, 4, 1), std::invalid_argument);
    EXPECT_THROW(king_collapse(s, 0, 0), std::invalid_argument);
}

TEST(cube, vaa_overlap_table_matches_published_values) {
    auto table = vaa_overlap_table(make_cube_setup());
    const double c4 = std::pow(std::cos(kTheta / 2), 4), s4 = std::pow(std::sin(kTheta / 2), 4);
    const std::array<double, 4> constants{0.5 * c4, 0.5 * s4, 1.5 * c4, 1.5 * s4};
    for (std::size_t r = 0; r < 8; ++r) {
        double sum = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(table[r][k], reference::kVaaOverlaps[r][k], 5e-4) << r << "," << k;
            bool is_constant = std::any_of(constants.begin(), constants.end(),
                                           [&](double c) { return std::abs(c - table[r][k]) < 1e-12; });
            EXPECT_TRUE(is_constant);
            sum += table[r][k];
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
    }
    EXPECT_NEAR(table[6][0], 0.933, 5e-4);
    EXPECT_NEAR(table[0][3], 0.0669, 5e-4);
}

TEST(cube, each_column_nearly_vanishes_once_per_diagonal) {
    auto table = vaa_overlap_table(make_cube_setup());
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t a = 0; a < 4; ++a) {
            int small = (table[2 * a][k] <= 0.025) + (table[2 * a + 1][k] <= 0.025);
            EXPECT_LE(small, 1);
        }
}

TEST(cube, vaa_predictions_and_success) {
    auto s = make_cube_setup();
    auto table = vaa_prediction_table(s);
    EXPECT_EQ(table.sign[0], reference::kChi1Prediction);
    auto success = vaa_success(s, table);
    const double closed = (2.0 + std::sqrt(3.0)) / 4.0;
    EXPECT_NEAR(success.total, closed, 1e-12);
    EXPECT_NEAR(1.5 * std::pow(std::cos(kTheta / 2), 4), closed, 1e-12);
    for (double w : success.wrong_mass) EXPECT_NEAR(w, 1.0 - closed, 1e-10);
    EXPECT_NEAR(1.0 - closed, 0.0669, 1e-4);
}

TEST(cube_conventional, baseline_and_fixed_axes) {
    auto s = make_cube_setup();
    EXPECT_NEAR(cube_guess_baseline(s), 0.75, 1e-12);
    // Closed form: P(m) = 5/8 + sum_a |m . n_a| / 8 with the best rule.
    auto m = BlochDirection::normalized(1, 1, -3);
    EXPECT_NEAR(best_cube_rule(s, m).second, (15.0 + std::sqrt(33.0)) / 24.0, 1e-12);
    auto z = BlochDirection(0, 0, 1);
    EXPECT_NEAR(best_cube_rule(s, z).second, 5.0 / 8.0 + 3.0 / (8.0 * std::sqrt(3.0)), 1e-12);
}

TEST(cube_conventional, rule_enumeration_is_exhaustive) {
    auto s = make_cube_setup();
    auto m = BlochDirection::normalized(0.3, -0.2, 0.9);
    double best = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
        CubeRule r{{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1}};
        best = std::max(best, conventional_cube_value(s, m, r));
    }
    EXPECT_DOUBLE_EQ(best, best_cube_rule(s, m).second);
}

TEST(cube_conventional, optimizer_finds_closed_form_optimum) {
    auto result = conventional_cube_optimize(1.0);
    const double expected = (15.0 + std::sqrt(33.0)) / 24.0;
    EXPECT_NEAR(result.best.value, expected, 1e-9);
    EXPECT_GE(result.best.value, result.grid_best - 1e-12);
    EXPECT_NEAR(result.best.angle_to_n1_deg, 180.0 - std::atan(4.0 * std::sqrt(2.0)) * 180.0 / std::numbers::pi, 1e-3);
    EXPECT_NE(result.best.great_circle_partner, -1);
    EXPECT_EQ(result.equivalent_optima.size(), 3u);
    std::set<int> partners;
    for (const auto &o : result.equivalent_optima) {
        partners.insert(o.great_circle_partner);
        EXPECT_NEAR(o.value, expected, 1e-6);
    }
    EXPECT_EQ(partners, (std::set<int>{1, 2, 3}));
    EXPECT_GT(result.best.value, cube_guess_baseline(make_cube_setup()));
}

TEST(cube_conventional, entanglement_advantage) {
    const double gap = (2.0 + std::sqrt(3.0)) / 4.0 - conventional_cube_optimize(2.0).best.value;
    EXPECT_NEAR(gap, 0.0687, 1e-4);
}

TEST(cube_conventional, grid_argument_validation) {
    EXPECT_THROW(conventional_cube_optimize(0.0), std::invalid_argument);
    EXPECT_THROW(conventional_cube_optimize(120.0), std::invalid_argument);
}
