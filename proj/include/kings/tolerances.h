#ifndef KINGS_TOLERANCES_H
#define KINGS_TOLERANCES_H

namespace kings {

/// Numerical tolerances shared by every module.
struct Tolerances {
    /// Norm and orthonormality checks when a state or basis is built.
    double construction = 1e-12;
    /// Ray equality, certification and general numeric comparison.
    double comparison = 1e-10;
    /// Squared-overlap match when searching for signal states.
    double overlap_match = 1e-9;
    /// Allowed drift of a probability vector before Born sampling rejects it.
    double probability_sum = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace kings

#endif
