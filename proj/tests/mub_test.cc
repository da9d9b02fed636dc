#include "kings/mub.h"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

using namespace kings;

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

Mat2 pauli(char which) {
    const Complex i{0, 1};
    Mat2 m;
    switch (which) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: m = Mat2::Identity(); break;
    }
    return m;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return out;
}

Eigen::Vector4cd as_eigen(const StateVector &s) {
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = s[static_cast<std::size_t>(k)];
    return v;
}

}  // namespace

TEST(mub, qubit_triple) {
    auto f = construct_mub(2);
    ASSERT_EQ(f.size(), 3u);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    EXPECT_NEAR(std::norm(inner(f.state(a, j), f.state(b, k))), 0.5, 1e-12);
}

TEST(mub, two_qubit_family_matches_published_rows) {
    const Complex o{1, 0}, i{0, 1};
    // Rows as printed, except psi_1^2 whose third entry carries the sign that
    // makes it the ++ eigenstate of Y1 and 1Y.
    const std::array<std::array<std::array<Complex, 4>, 4>, 4> rows{{
        {{{o, o, o, o}, {o, -o, o, -o}, {o, o, -o, -o}, {o, -o, -o, o}}},
        {{{o, i, i, -o}, {o, -i, i, o}, {o, i, -i, o}, {o, -i, -i, -o}}},
        {{{o, -o, i, i}, {o, o, -i, i}, {o, o, i, -i}, {o, -o, -i, -i}}},
        {{{o, i, -o, i}, {o, -i, o, i}, {o, i, o, -i}, {o, -i, -o, -i}}},
    }};
    auto f = construct_mub(4);
    ASSERT_EQ(f.size(), 5u);
    for (int j = 0; j < 4; ++j) {
        EXPECT_TRUE(same_ray(f.state(0, j), StateVector::basis_state(4, static_cast<std::size_t>(j))));
    }
    for (int r = 0; r < 4; ++r) {
        for (int j = 0; j < 4; ++j) {
            const auto &q = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            auto expected = StateVector::normalized({q.begin(), q.end()});
            EXPECT_TRUE(same_ray(f.state(r + 1, j), expected)) << "row " << r + 1 << " state " << j + 1;
        }
    }
}

TEST(mub, two_qubit_rows_are_joint_eigenstates_with_ordered_signatures) {
    const std::array<std::pair<Mat4, Mat4>, 5> ops{{
        {kron(pauli('Z'), pauli('1')), kron(pauli('1'), pauli('Z'))},
        {kron(pauli('X'), pauli('1')), kron(pauli('1'), pauli('X'))},
        {kron(pauli('Y'), pauli('1')), kron(pauli('1'), pauli('Y'))},
        {kron(pauli('X'), pauli('Y')), kron(pauli('Y'), pauli('Z'))},
        {kron(pauli('Y'), pauli('X')), kron(pauli('Z'), pauli('Y'))},
    }};
    const std::array<std::pair<double, double>, 4> signatures{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    auto f = construct_mub(4);
    for (int row = 0; row < 5; ++row) {
        const auto &[A, B] = ops[static_cast<std::size_t>(row)];
        EXPECT_LT((A * B - B * A).norm(), 1e-14);
        for (int j = 0; j < 4; ++j) {
            auto v = as_eigen(f.state(row, j));
            auto [ea, eb] = signatures[static_cast<std::size_t>(j)];
            EXPECT_LT((A * v - ea * v).norm(), 1e-12) << "row " << row << " state " << j;
            EXPECT_LT((B * v - eb * v).norm(), 1e-12) << "row " << row << " state " << j;
        }
    }
}

TEST(mub, five_dimensional_family_exhaustive_overlaps) {
    auto f = construct_mub(5);
    ASSERT_EQ(f.size(), 6u);
    double worst = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    worst = std::max(worst, std::abs(std::norm(inner(f.state(a, j), f.state(b, k))) - 0.2));
    EXPECT_LT(worst, 1e-12);
}

TEST(mub, certify_three_dimensional_family) {
    auto report = certify_family(construct_mub(3));
    EXPECT_TRUE(report.passed);
    EXPECT_LT(report.max_orthonormality_deviation, 1e-14);
    EXPECT_LT(report.max_unbiasedness_deviation, 1e-14);
}

TEST(mub, certify_supported_dimensions) {
    for (int d : {2, 3, 4, 5, 7, 11, 13}) {
        auto report = certify_family(construct_mub(d));
        EXPECT_TRUE(report.passed) << report.summary();
    }
}

TEST(mub, duplicate_basis_maximally_violates_unbiasedness) {
    for (int d : {2, 3, 5}) {
        auto f = construct_mub(d);
        auto bases = f.bases();
        bases[1].states = bases[0].states;
        auto report = certify_family(MubFamily(f.dim(), bases));
        EXPECT_FALSE(report.passed);
        EXPECT_NEAR(report.max_unbiasedness_deviation, 1.0 - 1.0 / d, 1e-12);
    }
}

TEST(mub, sign_flip_in_two_qubit_entry_is_located) {
    auto rows = two_qubit_quadruples();
    rows[3][1][2] = -rows[3][1][2];
    auto report = certify_family(family_from_quadruples(rows));
    EXPECT_FALSE(report.passed);
    EXPECT_GT(report.max_orthonormality_deviation, 0.1);
    EXPECT_EQ(report.orthonormality_site.basis_a, 3);
    EXPECT_TRUE(report.orthonormality_site.state_a == 1 || report.orthonormality_site.state_b == 1);
}

TEST(mub, unsupported_dimensions_throw) {
    for (int d : {0, 1, 6, 8, 9, 12}) {
        EXPECT_THROW(construct_mub(d), std::invalid_argument) << d;
    }
}

TEST(mub, completeness_against_every_other_basis) {
    for (int d : {2, 3, 4, 5, 7}) {
        auto f = construct_mub(d);
        for (int a = 0; a < static_cast<int>(f.size()); ++a)
            for (int b = 0; b < static_cast<int>(f.size()); ++b)
                for (int i = 0; i < d; ++i) {
                    double total = 0.0;
                    for (int j = 0; j < d; ++j) total += born_probability(f.state(a, i), f.state(b, j));
                    EXPECT_NEAR(total, 1.0, 1e-10);
                }
    }
}

TEST(mub, family_rejects_misshapen_bases) {
    auto f = construct_mub(3);
    auto bases = f.bases();
    bases[2].states.pop_back();
    EXPECT_THROW(MubFamily(3, bases), std::invalid_argument);
    EXPECT_THROW(f.basis(4), std::out_of_range);
}
