#include "kings/game.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kings {

std::size_t sample_born(std::span<const double> probabilities, Rng &rng) {
    if (probabilities.empty()) {
        throw std::invalid_argument("sample_born: no outcomes");
    }
    double sum = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    if (std::abs(sum - 1.0) > kDefaultTolerances.probability_sum) {
        throw std::runtime_error("sample_born: probabilities sum to " + std::to_string(sum));
    }
    double u = rng.uniform() * sum;
    double acc = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        acc += probabilities[k];
        if (u < acc) {
            return k;
        }
    }
    // u landed in the rounding gap at the top; take the last non-zero outcome.
    std::size_t k = probabilities.size() - 1;
    while (k > 0 && probabilities[k] <= 0.0) {
        --k;
    }
    return k;
}

namespace {

std::vector<double> born_row(const StateVector &state, const OrthonormalBasis &basis) {
    std::vector<double> p;
    p.reserve(basis.states.size());
    for (const auto &b : basis.states) {
        p.push_back(born_probability(state, b));
    }
    return p;
}

Transcript play(const GeneralStrategy &g, Rng &rng) {
    Transcript t;
    const int labels = static_cast<int>(g.family.size());
    t.basis = static_cast<int>(rng.below(static_cast<std::uint64_t>(labels)));
    const OrthonormalBasis &kings_basis = g.family.basis(t.basis);
    t.outcome = static_cast<int>(sample_born(born_row(g.preparation(), kings_basis), rng));
    const StateVector &collapsed = kings_basis[static_cast<std::size_t>(t.outcome)];
    t.control_outcome = static_cast<int>(sample_born(born_row(collapsed, g.control), rng));
    if (auto it = g.guesses.find(t.basis); it != g.guesses.end()) {
        t.predicted = it->second;
    } else {
        t.predicted = g.assignment.prediction(t.control_outcome, t.basis);
    }
    t.success = t.predicted == t.outcome;
    return t;
}

Transcript play(const CubeVaaStrategy &s, Rng &rng) {
    Transcript t;
    t.basis = static_cast<int>(rng.below(4));
    std::array<StateVector, 2> collapsed{king_collapse(s.setup, t.basis, 1),
                                         king_collapse(s.setup, t.basis, -1)};
    std::array<double, 2> p_sign{born_probability(s.setup.bell, collapsed[0]),
                                 born_probability(s.setup.bell, collapsed[1])};
    t.outcome = static_cast<int>(sample_born(p_sign, rng));
    std::array<double, 4> p_control{};
    for (std::size_t k = 0; k < 4; ++k) {
        p_control[k] = born_probability(collapsed[static_cast<std::size_t>(t.outcome)], s.setup.vaa[k]);
    }
    t.control_outcome = static_cast<int>(sample_born(p_control, rng));
    int sign = s.table.sign[static_cast<std::size_t>(t.control_outcome)][static_cast<std::size_t>(t.basis)];
    t.predicted = sign > 0 ? 0 : 1;
    t.success = t.predicted == t.outcome;
    return t;
}

Transcript play(const CubeConventionalStrategy &s, Rng &rng) {
    Transcript t;
    t.basis = static_cast<int>(rng.below(4));
    const BlochDirection &n = s.setup.diagonals[static_cast<std::size_t>(t.basis)];
    const StateVector prep = spin_up_state(s.setup.diagonals[0]);
    std::array<StateVector, 2> found{spin_up_state(n), spin_up_state(-n)};
    std::array<double, 2> p_sign{born_probability(prep, found[0]), born_probability(prep, found[1])};
    t.outcome = static_cast<int>(sample_born(p_sign, rng));
    std::array<double, 2> p_control{
        born_probability(found[static_cast<std::size_t>(t.outcome)], spin_up_state(s.axis)),
        born_probability(found[static_cast<std::size_t>(t.outcome)], spin_up_state(-s.axis))};
    t.control_outcome = static_cast<int>(sample_born(p_control, rng));
    int sign = s.rule.predict(t.basis, t.control_outcome == 0 ? 1 : -1);
    t.predicted = sign > 0 ? 0 : 1;
    t.success = t.predicted == t.outcome;
    return t;
}

}  // namespace

Transcript play_once(const GameStrategy &strategy, Rng &rng) {
    return std::visit([&](const auto &s) { return play(s, rng); }, strategy);
}

GameResult run(const GameConfig &config) {
    if (config.trials < 1) {
        throw std::invalid_argument("GameConfig: trials must be >= 1");
    }
    Rng rng(config.seed);
    GameResult result;
    result.trials = config.trials;
    result.seed = config.seed;
    for (std::uint64_t n = 0; n < config.trials; ++n) {
        Transcript t = play_once(config.strategy, rng);
        auto &tally = result.per_basis[t.basis];
        ++tally.chosen;
        if (t.success) {
            ++result.successes;
            ++tally.successes;
        }
    }
    result.estimate = static_cast<double>(result.successes) / static_cast<double>(result.trials);
    result.standard_error = std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(result.trials));
    return result;
}

}  // namespace kings
