#include "kings/search.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kings/bounds.h"
#include "kings/minimize.h"
#include "kings/random.h"

namespace kings {

namespace {

constexpr double kTarget4 = 5.0 / 8.0;
const double kInvSqrt10 = 1.0 / std::sqrt(10.0);

const std::array<Complex, 4> kFourthRoots{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                          Complex{0, -1}};

void require_certified(const MubFamily &family, std::size_t dim) {
    if (family.dim() != dim) {
        throw std::invalid_argument("expected a d=" + std::to_string(dim) + " family, got d=" +
                                    std::to_string(family.dim()));
    }
    auto report = certify_family(family);
    if (!report.passed) {
        throw std::invalid_argument("family failed certification: " + report.summary());
    }
}

// Gram matrix G[m][n] = <psi^m|psi^n> for the chosen state of each basis.
template <std::size_t N>
std::array<std::array<Complex, N>, N> gram(const MubFamily &family,
                                           const std::array<int, N> &indices) {
    std::array<std::array<Complex, N>, N> g{};
    for (std::size_t m = 0; m < N; ++m) {
        for (std::size_t n = 0; n < N; ++n) {
            g[m][n] = inner(family.state(static_cast<int>(m) + 1, indices[m]),
                            family.state(static_cast<int>(n) + 1, indices[n]));
        }
    }
    return g;
}

// max_m | |<psi^m|chi>|^2 - 5/8 | for chi = (1/sqrt 10) sum_n coeff_n psi^n.
double lattice_deviation(const std::array<std::array<Complex, 4>, 4> &g,
                         const std::array<Complex, 4> &coeff) {
    double worst = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
        Complex v{0, 0};
        for (std::size_t n = 0; n < 4; ++n) {
            v += g[m][n] * coeff[n];
        }
        worst = std::max(worst, std::abs(std::norm(v) / 10.0 - kTarget4));
    }
    return worst;
}

std::array<int, 4> decode_tuple(int t) { return {t / 64, (t / 16) % 4, (t / 4) % 4, t % 4}; }

}  // namespace

std::vector<Complex> signal_combination(const MubFamily &family, const std::array<int, 4> &indices,
                                        const std::array<Complex, 3> &phases) {
    std::vector<Complex> out(family.dim());
    for (int m = 0; m < 4; ++m) {
        Complex coeff = m == 0 ? Complex{1, 0} : phases[static_cast<std::size_t>(m - 1)];
        const auto psi = family.state(m + 1, indices[static_cast<std::size_t>(m)]).amplitudes();
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += kInvSqrt10 * coeff * psi[k];
        }
    }
    return out;
}

std::vector<SignalState> find_signal_states(const MubFamily &family) {
    require_certified(family, 4);
    std::vector<SignalState> found;
    for (int t = 0; t < 256; ++t) {
        auto idx = decode_tuple(t);
        auto g = gram(family, idx);
        for (const auto &b : kFourthRoots) {
            for (const auto &c : kFourthRoots) {
                for (const auto &dph : kFourthRoots) {
                    if (lattice_deviation(g, {Complex{1, 0}, b, c, dph}) >
                        kDefaultTolerances.overlap_match) {
                        continue;
                    }
                    std::array<Complex, 3> phases{b, c, dph};
                    auto amps = signal_combination(family, idx, phases);
                    found.push_back({idx, phases, StateVector::from_amplitudes(
                                                      std::move(amps),
                                                      kDefaultTolerances.comparison)});
                }
            }
        }
    }
    return found;
}

std::vector<MeasurementBasis4> find_measurement_bases(const std::vector<SignalState> &states) {
    const std::size_t n = states.size();
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bool o = std::abs(inner(states[a].vector, states[b].vector)) <
                     kDefaultTolerances.overlap_match;
            orth[a][b] = orth[b][a] = o;
        }
    }
    std::vector<MeasurementBasis4> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!orth[a][b]) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!orth[a][c] || !orth[b][c]) continue;
                for (std::size_t e = c + 1; e < n; ++e) {
                    if (orth[a][e] && orth[b][e] && orth[c][e]) {
                        out.push_back({{static_cast<int>(a), static_cast<int>(b),
                                        static_cast<int>(c), static_cast<int>(e)}});
                    }
                }
            }
        }
    }
    return out;
}

ConventionalStrategy certify_optimal_strategy(const MeasurementBasis4 &basis,
                                              const std::vector<SignalState> &states,
                                              const MubFamily &family) {
    OrthonormalBasis control{-1, {}};
    std::vector<std::vector<int>> forward(family.size());
    for (int label = 1; label <= 4; ++label) {
        forward[static_cast<std::size_t>(label)].assign(4, -1);
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const SignalState &s = states.at(static_cast<std::size_t>(basis.members[k]));
        control.states.push_back(s.vector);
        for (int label = 1; label <= 4; ++label) {
            int &slot = forward[static_cast<std::size_t>(label)]
                               [static_cast<std::size_t>(s.indices[static_cast<std::size_t>(label - 1)])];
            if (slot != -1) {
                throw std::logic_error("measurement basis is ill-conditioned in basis " +
                                       std::to_string(label));
            }
            slot = static_cast<int>(k);
        }
    }
    ConventionalStrategy strategy{family,
                                  family.state(0, 0),
                                  0,
                                  0,
                                  std::move(control),
                                  AssignmentMap(4, std::move(forward))};
    validate(strategy);
    double total = success_exact(strategy).total;
    if (std::abs(total - 0.7) > 1e-9) {
        throw std::logic_error("measurement basis reaches " + std::to_string(total) +
                               " instead of 0.7");
    }
    return strategy;
}

ConventionalStrategy known_optimal_strategy(int d) {
    if (d == 2) {
        auto n = BlochDirection::normalized(1, 1, 0);
        return make_strategy(construct_mub(2), 0, 0, OrthonormalBasis{-1, {spin_up_state(n), spin_up_state(-n)}});
    }
    if (d == 4) {
        auto family = construct_mub(4);
        auto states = find_signal_states(family);
        return certify_optimal_strategy(find_measurement_bases(states).front(), states, family);
    }
    throw std::invalid_argument("known_optimal_strategy: only d = 2 and d = 4 are available");
}

PhaseSweepReport verify_phase_lattice(const MubFamily &family,
                                      const std::vector<SignalState> &lattice,
                                      double resolution_deg, double threshold) {
    require_certified(family, 4);
    PhaseSweepReport report;
    report.resolution_deg = resolution_deg;
    report.min_deviation.assign(256, 1e300);
    const int steps = static_cast<int>(std::lround(360.0 / resolution_deg));
    std::vector<Complex> grid(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        grid[static_cast<std::size_t>(s)] =
            std::polar(1.0, 2.0 * std::numbers::pi * s / static_cast<double>(steps));
    }
    // |A + d|^2 = 10 * 5/8 with |d| = 1 fixes d up to two roots.
    const double r2 = 10.0 * kTarget4;
    for (int t = 0; t < 256; ++t) {
        auto g = gram(family, decode_tuple(t));
        double best = 1e300;
        for (const auto &b : grid) {
            for (const auto &c : grid) {
                Complex a3 = g[3][0] + g[3][1] * b + g[3][2] * c;
                double ra = std::abs(a3);
                double cosv = ra > 0 ? std::clamp((r2 - ra * ra - 1.0) / (2.0 * ra), -1.0, 1.0) : 1.0;
                double ang = std::acos(cosv);
                for (double sign : {1.0, -1.0}) {
                    Complex dph = std::polar(1.0, std::arg(a3) + sign * ang);
                    best = std::min(best, lattice_deviation(g, {Complex{1, 0}, b, c, dph}));
                }
            }
        }
        report.min_deviation[static_cast<std::size_t>(t)] = best;
        if (best < threshold) {
            report.solvable.push_back(decode_tuple(t));
        }
    }
    for (const auto &s : lattice) {
        auto g = gram(family, s.indices);
        std::vector<double> x0{std::arg(s.phases[0]), std::arg(s.phases[1]), std::arg(s.phases[2])};
        auto objective = [&](const std::vector<double> &x) {
            double dev = lattice_deviation(
                g, {Complex{1, 0}, std::polar(1.0, x[0]), std::polar(1.0, x[1]), std::polar(1.0, x[2])});
            return dev * dev;
        };
        SimplexOptions opts;
        opts.initial_step = 1e-3;
        opts.size_tolerance = 1e-12;
        auto result = minimize_simplex(objective, x0, opts);
        for (std::size_t q = 0; q < 3; ++q) {
            double diff = std::remainder(result.x[q] - x0[q], 2.0 * std::numbers::pi);
            report.max_refinement_shift = std::max(report.max_refinement_shift, std::abs(diff));
        }
    }
    for (const auto &tuple : report.solvable) {
        bool on_lattice = std::any_of(lattice.begin(), lattice.end(),
                                      [&](const SignalState &s) { return s.indices == tuple; });
        if (!on_lattice) {
            report.off_lattice.push_back(tuple);
        }
    }
    return report;
}

namespace {

struct D3Objective {
    std::array<std::array<Complex, 3>, 3> g{};
    double target = 0.0;

    double operator()(double alpha, double beta) const {
        std::array<Complex, 3> c{Complex{1, 0}, std::polar(1.0, alpha), std::polar(1.0, beta)};
        std::array<Complex, 3> v{};
        double norm2 = 0.0;
        for (std::size_t m = 0; m < 3; ++m) {
            for (std::size_t n = 0; n < 3; ++n) {
                v[m] += g[m][n] * c[n];
            }
            norm2 += (std::conj(c[m]) * v[m]).real();
        }
        double worst = 0.0;
        for (std::size_t m = 0; m < 3; ++m) {
            worst = std::max(worst, std::abs(std::norm(v[m]) / norm2 - target));
        }
        return worst;
    }
};

}  // namespace

ImpossibilityReport certify_d3_impossible(const MubFamily &family,
                                          const ImpossibilityOptions &options) {
    require_certified(family, 3);
    ImpossibilityReport report;
    report.delta = options.delta;
    report.target = overlap_target(3);
    const double n2 = 1.0 / (3.0 + std::sqrt(3.0) * 2.0);
    const int steps = static_cast<int>(std::lround(360.0 / options.grid_deg));
    report.worst_case_min = 1e300;
    int tuple_number = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k, ++tuple_number) {
                D3Objective obj{gram<3>(family, {i, j, k}), report.target};
                TupleDeviation row;
                row.indices = {i, j, k};

                row.grid_min = 1e300;
                for (int a = 0; a < steps; ++a) {
                    for (int b = 0; b < steps; ++b) {
                        double alpha = 2.0 * std::numbers::pi * a / steps;
                        double beta = 2.0 * std::numbers::pi * b / steps;
                        row.grid_min = std::min(row.grid_min, obj(alpha, beta));
                    }
                }

                row.optimizer_min = 1e300;
                Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(tuple_number)));
                for (int s = 0; s < options.starts; ++s) {
                    std::vector<double> x0{2.0 * std::numbers::pi * rng.uniform(),
                                           2.0 * std::numbers::pi * rng.uniform()};
                    SimplexOptions opts;
                    opts.initial_step = 0.3;
                    opts.size_tolerance = 1e-9;
                    auto res = minimize_simplex(
                        [&](const std::vector<double> &x) { return obj(x[0], x[1]); }, x0, opts);
                    row.optimizer_min = std::min(row.optimizer_min, res.value);
                }

                // Align <psi^1|psi^2> and <psi^1|psi^3> to be real and positive.
                Complex v0 = obj.g[0][0] + obj.g[0][1] * std::polar(1.0, -std::arg(obj.g[0][1])) +
                             obj.g[0][2] * std::polar(1.0, -std::arg(obj.g[0][2]));
                row.single_overlap_residual = std::abs(n2 * std::norm(v0) - report.target);

                report.worst_case_min = std::min(report.worst_case_min, row.min_deviation());
                report.tuples.push_back(row);
            }
        }
    }
    report.passed = report.worst_case_min > options.delta;
    return report;
}

}  // namespace kings
