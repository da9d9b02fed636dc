#ifndef KINGS_BOUNDS_H
#define KINGS_BOUNDS_H

#include <cstdint>
#include <optional>
#include <string>

#include "kings/mub.h"

namespace kings {

/// Which closed form produced a BoundReport.
enum class BoundFormula { kEq1, kA1, kA7, kA8, kA9 };

std::string to_string(BoundFormula f);

struct BoundReport {
    int d = 0;
    std::optional<int> r;
    double value = 0.0;
    BoundFormula formula = BoundFormula::kEq1;
};

/// Upper bound on conventional success: (2 sqrt d + d - 1) / (sqrt d (1 + d)).
double bound_p(int d);

/// Largest squared overlap a signal state can share with each of the d
/// bases it signals: p = (sqrt d + d - 1) / (d sqrt d).
double overlap_target(int d);

/// Bound on the success collected from r outright guesses.
double guess_bound(int d, int r);

/// Bound on the success collected from the control measurement on s bases.
double control_bound(int d, int s);

/// guess_bound(d, r) + control_bound(d, d + 1 - r).
double total_bound(int d, int r);

/// Eq1 when r is unset; otherwise A8 for r in {0, d+1} and A9 in between.
BoundReport bound_report(int d, std::optional<int> r = std::nullopt);

struct RelaxedMaxOptions {
    int restarts = 64;
    std::uint64_t seed = 0;
    /// chi <- normalize(chi + step * M chi) on every ascent step.
    double step = 10.0;
    double value_tolerance = 1e-10;
    int max_iterations = 100000;
};

struct RelaxedMaxResult {
    double value = 0.0;
    StateVector maximizer = StateVector::basis_state(1, 0);
};

/// Maximizes F(chi) = sum over i != excluded of max_j |<psi_j^i|chi>|^2 over
/// unit chi by multi-start ascent. Each step fixes the current argmax states,
/// forms M = sum_i |psi^i><psi^i| and moves chi along M chi, which never
/// decreases F.
RelaxedMaxResult relaxed_f_max(const MubFamily &family, int excluded,
                               const RelaxedMaxOptions &options = {});

/// F(chi) as defined above.
double signal_weight(const MubFamily &family, int excluded, const StateVector &chi);

}  // namespace kings

#endif
