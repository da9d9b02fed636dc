#ifndef KINGS_REFERENCE_H
#define KINGS_REFERENCE_H

#include <array>

#include "kings/qstate.h"

/// Published reference values the reproductions are checked against.
namespace kings::reference {

struct BoundRow {
    int d;
    double value;  // four decimals
};

inline constexpr std::array<BoundRow, 6> kBoundTable{{
    {2, 0.9024}, {3, 0.7887}, {4, 0.7000}, {5, 0.6315}, {8, 0.4972}, {9, 0.4667}}};

/// Signal-state row: 1-based (i, j, k, l) and phases (b, c, d) as
/// multiples of i: 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i.
struct SignalRow {
    std::array<int, 4> tuple;
    std::array<int, 3> phase_power;
};

inline Complex phase_from_power(int p) {
    constexpr std::array<double, 4> re{1, 0, -1, 0};
    constexpr std::array<double, 4> im{0, 1, 0, -1};
    return {re[static_cast<std::size_t>(p)], im[static_cast<std::size_t>(p)]};
}

inline constexpr std::array<SignalRow, 32> kSignalStates{{
    {{1, 1, 1, 1}, {3, 3, 3}}, {{1, 1, 2, 2}, {3, 0, 0}}, {{1, 2, 3, 1}, {0, 0, 3}},
    {{1, 2, 4, 2}, {0, 1, 0}}, {{1, 3, 1, 3}, {0, 3, 0}}, {{1, 3, 2, 4}, {0, 0, 1}},
    {{1, 4, 3, 3}, {1, 0, 0}}, {{1, 4, 4, 4}, {1, 1, 1}}, {{2, 1, 1, 4}, {0, 0, 3}},
    {{2, 1, 2, 3}, {0, 1, 0}}, {{2, 2, 3, 4}, {3, 3, 3}}, {{2, 2, 4, 3}, {3, 0, 0}},
    {{2, 3, 1, 2}, {1, 0, 0}}, {{2, 3, 2, 1}, {1, 1, 1}}, {{2, 4, 3, 2}, {0, 3, 0}},
    {{2, 4, 4, 1}, {0, 0, 1}}, {{3, 1, 3, 2}, {0, 0, 1}}, {{3, 1, 4, 1}, {0, 3, 0}},
    {{3, 2, 1, 2}, {1, 1, 1}}, {{3, 2, 2, 1}, {1, 0, 0}}, {{3, 3, 3, 4}, {3, 0, 0}},
    {{3, 3, 4, 3}, {3, 3, 3}}, {{3, 4, 1, 4}, {0, 1, 0}}, {{3, 4, 2, 3}, {0, 0, 3}},
    {{4, 1, 3, 3}, {1, 1, 1}}, {{4, 1, 4, 4}, {1, 0, 0}}, {{4, 2, 1, 3}, {0, 0, 1}},
    {{4, 2, 2, 4}, {0, 3, 0}}, {{4, 3, 3, 1}, {0, 1, 0}}, {{4, 3, 4, 2}, {0, 0, 3}},
    {{4, 4, 1, 1}, {3, 0, 0}}, {{4, 4, 2, 2}, {3, 3, 3}},
}};

/// Measurement bases as 1-based signal-state numbers.
inline constexpr std::array<std::array<int, 4>, 32> kMeasurementBases{{
    {1, 11, 22, 32}, {1, 11, 24, 30}, {1, 12, 21, 32}, {1, 15, 22, 28},
    {2, 11, 22, 31}, {2, 12, 21, 31}, {2, 12, 23, 29}, {2, 16, 21, 27},
    {3, 9, 22, 32},  {3, 9, 24, 30},  {3, 10, 23, 30}, {3, 13, 24, 26},
    {4, 9, 24, 29},  {4, 10, 21, 31}, {4, 10, 23, 29}, {4, 14, 23, 25},
    {5, 11, 18, 32}, {5, 15, 18, 28}, {5, 15, 20, 26}, {5, 16, 17, 28},
    {6, 12, 17, 31}, {6, 15, 18, 27}, {6, 16, 17, 27}, {6, 16, 19, 25},
    {7, 9, 20, 30},  {7, 13, 18, 28}, {7, 13, 20, 26}, {7, 14, 19, 26},
    {8, 10, 19, 29}, {8, 13, 20, 25}, {8, 14, 17, 27}, {8, 14, 19, 25},
}};

/// Squared overlaps of the collapsed cube states with chi_1..chi_4, as printed.
inline constexpr std::array<std::array<double, 4>, 8> kVaaOverlaps{{
    {0.311, 0.311, 0.311, 0.0669},
    {0.0223, 0.0223, 0.0223, 0.933},
    {0.0223, 0.933, 0.0223, 0.0223},
    {0.311, 0.0669, 0.311, 0.311},
    {0.311, 0.311, 0.0669, 0.311},
    {0.0223, 0.0223, 0.933, 0.0223},
    {0.933, 0.0223, 0.0223, 0.0223},
    {0.0669, 0.311, 0.311, 0.311},
}};

/// Predicted signs on chi_1 for diagonals n_1..n_4.
inline constexpr std::array<int, 4> kChi1Prediction{1, -1, 1, 1};

}  // namespace kings::reference

#endif
