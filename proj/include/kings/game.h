#ifndef KINGS_GAME_H
#define KINGS_GAME_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kings/cube.h"
#include "kings/random.h"
#include "kings/strategy.h"

namespace kings {

/// Entangled cube play: Bell preparation, VAA control measurement.
struct CubeVaaStrategy {
    CubeGameSetup setup;
    PredictionTable table;
};

/// Conventional cube play: |n_1> preparation, spin measurement along `axis`.
struct CubeConventionalStrategy {
    CubeGameSetup setup;
    BlochDirection axis;
    CubeRule rule;
};

using GameStrategy = std::variant<GeneralStrategy, CubeVaaStrategy, CubeConventionalStrategy>;

/// One round of the game.
struct Transcript {
    /// King's basis label (or diagonal index in cube mode).
    int basis = 0;
    /// King's outcome: state index, or 0 for + / 1 for - in cube mode.
    int outcome = 0;
    int control_outcome = 0;
    int predicted = 0;
    bool success = false;
};

/// Inverse-CDF draw. Probabilities off from unit sum by less than
/// Tolerances::probability_sum are renormalized; anything worse throws
/// std::runtime_error.
std::size_t sample_born(std::span<const double> probabilities, Rng &rng);

Transcript play_once(const GameStrategy &strategy, Rng &rng);

struct GameConfig {
    GameStrategy strategy;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct BasisTally {
    std::uint64_t chosen = 0;
    std::uint64_t successes = 0;
    bool operator==(const BasisTally &) const = default;
};

struct GameResult {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    std::map<int, BasisTally> per_basis;
    std::string rng = std::string(Rng::kName);
    std::uint64_t seed = 0;

    bool operator==(const GameResult &) const = default;
};

/// Plays `trials` rounds from one seeded generator; identical configs give
/// identical results.
GameResult run(const GameConfig &config);

}  // namespace kings

#endif
