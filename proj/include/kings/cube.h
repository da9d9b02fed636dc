#ifndef KINGS_CUBE_H
#define KINGS_CUBE_H

#include <array>
#include <vector>

#include "kings/qstate.h"

namespace kings {

/// The qubit game where the king measures spin along one of the four body
/// diagonals of a cube. Diagonals are indexed 0..3 here.
struct CubeGameSetup {
    std::array<BlochDirection, 4> diagonals;
    /// (|00> + |11>) / sqrt 2
    StateVector bell;
    /// The four entangled control states, chi_1..chi_4.
    std::array<StateVector, 4> vaa;
    /// Reflection in the x-z plane: 0 <-> 3, 1 <-> 2.
    std::array<int, 4> reflection_partner{3, 2, 1, 0};
};

CubeGameSetup make_cube_setup();

/// |<bell| (|n_a, n_b> + |-n_a, -n_b>) / sqrt 2>| for diagonals a, b.
double bell_pairing_overlap(const CubeGameSetup &setup, int a, int b);

struct BellDecompositionReport {
    std::array<double, 4> ray_overlap{};
    bool passed = false;
};

/// Checks the four ways of writing the Bell state as ray equalities.
BellDecompositionReport verify_bell_decompositions(const CubeGameSetup &setup);

/// Object and ancilla state after the king finds `sign` (+1 or -1) along
/// diagonal `a`: |sign n_a> (x) |sign n_reflect(a)>.
StateVector king_collapse(const CubeGameSetup &setup, int a, int sign);

/// Rows ordered (n1,+), (n1,-), (n2,+), ..., columns chi_1..chi_4.
using VaaOverlapTable = std::array<std::array<double, 4>, 8>;

VaaOverlapTable vaa_overlap_table(const CubeGameSetup &setup);

/// sign[k][a]: the sign predicted for diagonal a when chi_k is observed.
struct PredictionTable {
    std::array<std::array<int, 4>, 4> sign{};
};

/// Predicts, for every (chi_k, diagonal), the sign whose collapsed state
/// overlaps chi_k more. Throws std::logic_error on a tie.
PredictionTable vaa_prediction_table(const CubeGameSetup &setup);

struct VaaSuccess {
    double total = 0.0;
    /// Probability of a wrong prediction for each collapsed state.
    std::array<double, 8> wrong_mass{};
};

VaaSuccess vaa_success(const CubeGameSetup &setup, const PredictionTable &table);

/// Conventional decision rule: the sign predicted for diagonals 2, 3, 4 when
/// the control outcome is +; outcome - predicts the opposite sign.
struct CubeRule {
    std::array<int, 3> sign_on_plus{1, 1, 1};

    int predict(int diagonal, int outcome) const;
};

/// Success with preparation |n_1> and control measurement along `axis`.
double conventional_cube_value(const CubeGameSetup &setup, const BlochDirection &axis,
                               const CubeRule &rule);

/// Best of the 8 well-conditioned rules for `axis`.
std::pair<CubeRule, double> best_cube_rule(const CubeGameSetup &setup, const BlochDirection &axis);

/// No control measurement: guess the likelier sign for each diagonal.
double cube_guess_baseline(const CubeGameSetup &setup);

struct CubeOptimum {
    /// Oriented so that axis . n_1 <= 0 (the measurement along -m is the
    /// same with outcomes relabeled).
    BlochDirection axis = BlochDirection(0, 0, 1);
    CubeRule rule;
    double value = 0.0;
    double angle_to_n1_deg = 0.0;
    /// k in 1..3 (diagonals n_2..n_4) whose great circle with n_1 holds the
    /// axis, or -1.
    int great_circle_partner = -1;
};

struct CubeConventionalResult {
    CubeOptimum best;
    /// Every refined local optimum within 1e-6 of the best value.
    std::vector<CubeOptimum> equivalent_optima;
    double grid_best = 0.0;
    std::size_t grid_points = 0;
};

/// Grid scan in polar coordinates followed by simplex refinement.
CubeConventionalResult conventional_cube_optimize(double grid_deg = 0.25, bool refine = true);

}  // namespace kings

#endif
