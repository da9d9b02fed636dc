#ifndef KINGS_SEARCH_H
#define KINGS_SEARCH_H

#include <array>
#include <cstdint>
#include <vector>

#include "kings/mub.h"
#include "kings/strategy.h"

namespace kings {

/// A control state built from one state of each of bases 1-4 of the d = 4
/// family: (|psi_i^1> + b|psi_j^2> + c|psi_k^3> + d|psi_l^4>) / sqrt(10).
struct SignalState {
    /// 0-based state indices (i, j, k, l) into bases 1, 2, 3, 4.
    std::array<int, 4> indices{};
    /// Unit-modulus coefficients (b, c, d); the basis-1 coefficient is 1.
    std::array<Complex, 3> phases{};
    StateVector vector = StateVector::basis_state(4, 0);
};

/// (1/sqrt 10)(psi^1 + b psi^2 + c psi^3 + d psi^4), not renormalized.
std::vector<Complex> signal_combination(const MubFamily &family, const std::array<int, 4> &indices,
                                        const std::array<Complex, 3> &phases);

/// Exhausts the 256 index tuples and the 4^3 fourth-root phase choices, keeping
/// states whose four squared overlaps equal 5/8. Sorted by (i, j, k, l).
/// Throws unless `family` is a certified d = 4 family.
std::vector<SignalState> find_signal_states(const MubFamily &family);

/// A control basis drawn from the signal states: four indices into the
/// signal-state list, ascending.
struct MeasurementBasis4 {
    std::array<int, 4> members{};
};

/// Scans every quadruple for mutual orthogonality; lexicographic order.
std::vector<MeasurementBasis4> find_measurement_bases(const std::vector<SignalState> &states);

/// Builds the strategy that prepares |psi_1^0>, measures `basis`, and on
/// outcome (i, j, k, l) predicts state i of basis 1, j of basis 2 and so on.
/// Throws std::logic_error if the basis is not well-conditioned or misses 0.7.
ConventionalStrategy certify_optimal_strategy(const MeasurementBasis4 &basis,
                                              const std::vector<SignalState> &states,
                                              const MubFamily &family);

/// Outcome of the continuous phase sweep run alongside the lattice search.
struct PhaseSweepReport {
    double resolution_deg = 1.0;
    /// Minimal max-deviation from 5/8 per tuple (index i*64 + j*16 + k*4 + l).
    std::vector<double> min_deviation;
    /// Tuples whose sweep minimum fell under the acceptance threshold.
    std::vector<std::array<int, 4>> solvable;
    /// Largest phase movement when refining each lattice solution.
    double max_refinement_shift = 0.0;
    /// Solvable tuples that are not lattice solutions.
    std::vector<std::array<int, 4>> off_lattice;
};

/// Sweeps the (b, c) phases at `resolution_deg`, solving the last phase
/// exactly, then refines each lattice solution locally.
PhaseSweepReport verify_phase_lattice(const MubFamily &family,
                                      const std::vector<SignalState> &lattice,
                                      double resolution_deg = 1.0, double threshold = 1e-3);

/// Strategy reaching bound_p(d) with |psi_1^0> prepared: for d = 2 the
/// control axis lies midway between x and y; for d = 4 it is the first
/// measurement basis found. Throws std::invalid_argument for other d.
ConventionalStrategy known_optimal_strategy(int d);

struct TupleDeviation {
    std::array<int, 3> indices{};
    /// Minimal max |overlap^2 - target| found by the multi-start optimizer.
    double optimizer_min = 0.0;
    /// Same quantity on the phase grid.
    double grid_min = 0.0;
    /// Residual of |<psi^1|chi>|^2 - target after aligning phases for one
    /// overlap at the fixed normalization N = (d + sqrt d (d-1))^{-1/2}.
    double single_overlap_residual = 0.0;

    double min_deviation() const { return std::min(optimizer_min, grid_min); }
};

struct ImpossibilityReport {
    double delta = 1e-3;
    double target = 0.0;
    std::vector<TupleDeviation> tuples;
    double worst_case_min = 0.0;
    bool passed = false;
};

struct ImpossibilityOptions {
    double delta = 1e-3;
    int starts = 32;
    double grid_deg = 0.5;
    std::uint64_t seed = 0;
};

/// For every tuple of one state from each of bases 1-3 of a d = 3 family,
/// minimizes over the two free phases the largest deviation of the three
/// squared overlaps of the normalized combination from overlap_target(3).
ImpossibilityReport certify_d3_impossible(const MubFamily &family,
                                          const ImpossibilityOptions &options = {});

}  // namespace kings

#endif
