#include "kings/bounds.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kings/random.h"

namespace kings {

std::string to_string(BoundFormula f) {
    switch (f) {
        case BoundFormula::kEq1: return "EQ1";
        case BoundFormula::kA1: return "A1";
        case BoundFormula::kA7: return "A7";
        case BoundFormula::kA8: return "A8";
        case BoundFormula::kA9: return "A9";
    }
    return "?";
}

namespace {

void require_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("bounds need d >= 2, got " + std::to_string(d));
    }
}

void require_count(int d, int n) {
    require_dim(d);
    if (n < 0 || n > d + 1) {
        throw std::invalid_argument("basis count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(d + 1));
    }
}

}  // namespace

double bound_p(int d) {
    require_dim(d);
    double s = std::sqrt(static_cast<double>(d));
    return (2.0 * s + d - 1.0) / (s * (1.0 + d));
}

double overlap_target(int d) {
    require_dim(d);
    double s = std::sqrt(static_cast<double>(d));
    return (s + d - 1.0) / (d * s);
}

double guess_bound(int d, int r) {
    require_count(d, r);
    if (r == 0) {
        return 0.0;
    }
    double s = std::sqrt(static_cast<double>(d));
    return (s + r - 1.0) / (s * (d + 1.0));
}

double control_bound(int d, int s) {
    require_count(d, s);
    if (s == 0) {
        return 0.0;
    }
    double root = std::sqrt(static_cast<double>(d));
    return (root + s - 1.0) / ((d + 1.0) * root);
}

double total_bound(int d, int r) {
    require_count(d, r);
    return guess_bound(d, r) + control_bound(d, d + 1 - r);
}

BoundReport bound_report(int d, std::optional<int> r) {
    if (!r) {
        return {d, std::nullopt, bound_p(d), BoundFormula::kEq1};
    }
    BoundFormula f = (*r == 0 || *r == d + 1) ? BoundFormula::kA8 : BoundFormula::kA9;
    return {d, r, total_bound(d, *r), f};
}

namespace {

// Index of the most-overlapping state in each counted basis.
std::vector<int> argmax_states(const MubFamily &family, int excluded, std::span<const Complex> chi,
                               double *value) {
    std::vector<int> picks(family.size(), -1);
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        if (i == excluded) {
            continue;
        }
        double best = -1.0;
        for (std::size_t j = 0; j < family.dim(); ++j) {
            double ov = std::norm(dot(family.state(i, static_cast<int>(j)).amplitudes(), chi));
            if (ov > best) {
                best = ov;
                picks[static_cast<std::size_t>(i)] = static_cast<int>(j);
            }
        }
        total += best;
    }
    if (value) {
        *value = total;
    }
    return picks;
}

}  // namespace

double signal_weight(const MubFamily &family, int excluded, const StateVector &chi) {
    double value = 0.0;
    argmax_states(family, excluded, chi.amplitudes(), &value);
    return value;
}

RelaxedMaxResult relaxed_f_max(const MubFamily &family, int excluded,
                               const RelaxedMaxOptions &options) {
    const std::size_t d = family.dim();
    RelaxedMaxResult best{-1.0, StateVector::basis_state(d, 0)};
    for (int start = 0; start < options.restarts; ++start) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(start)));
        StateVector s = random_state(d, rng);
        std::vector<Complex> chi(s.amplitudes().begin(), s.amplitudes().end());
        double value = 0.0;
        std::vector<int> picks = argmax_states(family, excluded, chi, &value);
        for (int iter = 0; iter < options.max_iterations; ++iter) {
            // next = chi + step * sum_i psi^i <psi^i|chi>
            std::vector<Complex> next = chi;
            for (int i = 0; i < static_cast<int>(family.size()); ++i) {
                if (i == excluded) {
                    continue;
                }
                const auto psi = family.state(i, picks[static_cast<std::size_t>(i)]).amplitudes();
                Complex c = options.step * dot(psi, chi);
                for (std::size_t k = 0; k < d; ++k) {
                    next[k] += c * psi[k];
                }
            }
            double n = norm(next);
            for (auto &c : next) {
                c /= n;
            }
            double next_value = 0.0;
            picks = argmax_states(family, excluded, next, &next_value);
            chi = std::move(next);
            bool done = std::abs(next_value - value) < options.value_tolerance;
            value = next_value;
            if (done) {
                break;
            }
        }
        if (value > best.value) {
            best = {value, StateVector::normalized(chi)};
        }
    }
    return best;
}

}  // namespace kings
