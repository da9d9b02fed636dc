#include "kings/cube.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kings/minimize.h"

namespace kings {

namespace {

void require_diagonal(int a) {
    if (a < 0 || a > 3) {
        throw std::invalid_argument("diagonal index " + std::to_string(a) + " outside 0..3");
    }
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
}

BlochDirection signed_direction(const BlochDirection &n, int sign) { return sign > 0 ? n : -n; }

}  // namespace

CubeGameSetup make_cube_setup() {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex e = std::polar(1.0, std::numbers::pi / 4.0);
    const Complex ec = std::conj(e);
    return CubeGameSetup{
        {BlochDirection::normalized(1, 1, 1), BlochDirection::normalized(-1, 1, 1),
         BlochDirection::normalized(-1, -1, 1), BlochDirection::normalized(1, -1, 1)},
        StateVector::from_amplitudes({r, 0, 0, r}),
        {StateVector::from_amplitudes({r, 0.5 * e, 0.5 * ec, 0}),
         StateVector::from_amplitudes({r, -0.5 * e, -0.5 * ec, 0}),
         StateVector::from_amplitudes({0, 0.5 * ec, 0.5 * e, r}),
         StateVector::from_amplitudes({0, -0.5 * ec, -0.5 * e, r})},
    };
}

double bell_pairing_overlap(const CubeGameSetup &setup, int a, int b) {
    require_diagonal(a);
    require_diagonal(b);
    const auto &na = setup.diagonals[static_cast<std::size_t>(a)];
    const auto &nb = setup.diagonals[static_cast<std::size_t>(b)];
    StateVector up = tensor(spin_up_state(na), spin_up_state(nb));
    StateVector down = tensor(spin_up_state(-na), spin_up_state(-nb));
    std::vector<Complex> sum(4);
    for (std::size_t k = 0; k < 4; ++k) {
        sum[k] = (up[k] + down[k]) / std::numbers::sqrt2;
    }
    return std::abs(dot(setup.bell.amplitudes(), sum));
}

BellDecompositionReport verify_bell_decompositions(const CubeGameSetup &setup) {
    BellDecompositionReport report;
    report.passed = true;
    for (int a = 0; a < 4; ++a) {
        double ov = bell_pairing_overlap(setup, a, setup.reflection_partner[static_cast<std::size_t>(a)]);
        report.ray_overlap[static_cast<std::size_t>(a)] = ov;
        report.passed = report.passed && std::abs(ov - 1.0) <= kDefaultTolerances.comparison;
    }
    return report;
}

StateVector king_collapse(const CubeGameSetup &setup, int a, int sign) {
    require_diagonal(a);
    require_sign(sign);
    const auto &na = setup.diagonals[static_cast<std::size_t>(a)];
    const auto &nb = setup.diagonals[static_cast<std::size_t>(setup.reflection_partner[static_cast<std::size_t>(a)])];
    return tensor(spin_up_state(signed_direction(na, sign)), spin_up_state(signed_direction(nb, sign)));
}

VaaOverlapTable vaa_overlap_table(const CubeGameSetup &setup) {
    VaaOverlapTable table{};
    for (int a = 0; a < 4; ++a) {
        for (int s = 0; s < 2; ++s) {
            StateVector row = king_collapse(setup, a, s == 0 ? 1 : -1);
            for (std::size_t k = 0; k < 4; ++k) {
                table[static_cast<std::size_t>(2 * a + s)][k] = born_probability(row, setup.vaa[k]);
            }
        }
    }
    return table;
}

PredictionTable vaa_prediction_table(const CubeGameSetup &setup) {
    VaaOverlapTable ov = vaa_overlap_table(setup);
    PredictionTable table;
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t a = 0; a < 4; ++a) {
            double up = ov[2 * a][k];
            double down = ov[2 * a + 1][k];
            if (std::abs(up - down) < kDefaultTolerances.construction) {
                throw std::logic_error("tied VAA overlaps for chi_" + std::to_string(k + 1) +
                                       ", diagonal " + std::to_string(a + 1));
            }
            table.sign[k][a] = up > down ? 1 : -1;
        }
    }
    return table;
}

VaaSuccess vaa_success(const CubeGameSetup &setup, const PredictionTable &table) {
    VaaOverlapTable ov = vaa_overlap_table(setup);
    VaaSuccess out;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t s = 0; s < 2; ++s) {
            int sign = s == 0 ? 1 : -1;
            double p_sign = born_probability(setup.bell, king_collapse(setup, static_cast<int>(a), sign));
            double wrong = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                if (table.sign[k][a] == sign) {
                    out.total += 0.25 * p_sign * ov[2 * a + s][k];
                } else {
                    wrong += ov[2 * a + s][k];
                }
            }
            out.wrong_mass[2 * a + s] = wrong;
        }
    }
    return out;
}

int CubeRule::predict(int diagonal, int outcome) const {
    if (diagonal == 0) {
        return 1;
    }
    return sign_on_plus[static_cast<std::size_t>(diagonal - 1)] * outcome;
}

namespace {

// Collapsed states and their Born weights from the |n_1> preparation; these
// do not depend on the control axis.
struct ConventionalModel {
    std::array<std::array<StateVector, 2>, 3> found;
    std::array<std::array<double, 2>, 3> p_sign{};

    explicit ConventionalModel(const CubeGameSetup &setup)
        : found{{{spin_up_state(setup.diagonals[1]), spin_up_state(-setup.diagonals[1])},
                 {spin_up_state(setup.diagonals[2]), spin_up_state(-setup.diagonals[2])},
                 {spin_up_state(setup.diagonals[3]), spin_up_state(-setup.diagonals[3])}}} {
        const StateVector prep = spin_up_state(setup.diagonals[0]);
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t s = 0; s < 2; ++s) {
                p_sign[a][s] = born_probability(prep, found[a][s]);
            }
        }
    }
};

// contribution[a-1][e]: success on diagonal a when the rule predicts sign
// e*outcome, e = +1 (index 0) or -1 (index 1).
std::array<std::array<double, 2>, 3> rule_contributions(const ConventionalModel &model,
                                                        const BlochDirection &axis) {
    const std::array<StateVector, 2> control{spin_up_state(axis), spin_up_state(-axis)};
    std::array<std::array<double, 2>, 3> out{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t si = 0; si < 2; ++si) {
            int s = si == 0 ? 1 : -1;
            for (std::size_t t = 0; t < 2; ++t) {
                int outcome = t == 0 ? 1 : -1;
                double q = born_probability(model.found[a][si], control[t]);
                // e * outcome == s  <=>  e == s * outcome
                std::size_t e = s * outcome > 0 ? 0 : 1;
                out[a][e] += model.p_sign[a][si] * q;
            }
        }
    }
    return out;
}

std::pair<CubeRule, double> best_rule(const ConventionalModel &model, const BlochDirection &axis);

double rule_value(const std::array<std::array<double, 2>, 3> &contrib, const CubeRule &rule) {
    double v = 0.25;
    for (std::size_t a = 0; a < 3; ++a) {
        v += 0.25 * contrib[a][rule.sign_on_plus[a] > 0 ? 0 : 1];
    }
    return v;
}

}  // namespace

double conventional_cube_value(const CubeGameSetup &setup, const BlochDirection &axis,
                               const CubeRule &rule) {
    return rule_value(rule_contributions(ConventionalModel(setup), axis), rule);
}

std::pair<CubeRule, double> best_cube_rule(const CubeGameSetup &setup, const BlochDirection &axis) {
    return best_rule(ConventionalModel(setup), axis);
}

namespace {

std::pair<CubeRule, double> best_rule(const ConventionalModel &model, const BlochDirection &axis) {
    auto contrib = rule_contributions(model, axis);
    CubeRule best;
    double best_value = -1.0;
    for (int mask = 0; mask < 8; ++mask) {
        CubeRule rule{{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1}};
        double v = rule_value(contrib, rule);
        if (v > best_value) {
            best_value = v;
            best = rule;
        }
    }
    return {best, best_value};
}

}  // namespace

double cube_guess_baseline(const CubeGameSetup &setup) {
    const StateVector prep = spin_up_state(setup.diagonals[0]);
    double v = 0.25;
    for (std::size_t a = 1; a < 4; ++a) {
        double up = born_probability(prep, spin_up_state(setup.diagonals[a]));
        v += 0.25 * std::max(up, 1.0 - up);
    }
    return v;
}

namespace {

CubeOptimum make_optimum(const CubeGameSetup &setup, BlochDirection axis, CubeRule rule, double value) {
    if (axis.dot(setup.diagonals[0]) > 0) {
        axis = -axis;
        for (auto &s : rule.sign_on_plus) {
            s = -s;
        }
    }
    CubeOptimum opt{axis, rule, value, 0.0, -1};
    opt.angle_to_n1_deg =
        std::acos(std::clamp(axis.dot(setup.diagonals[0]), -1.0, 1.0)) * 180.0 / std::numbers::pi;
    const auto &n1 = setup.diagonals[0];
    for (int k = 1; k < 4; ++k) {
        const auto &nk = setup.diagonals[static_cast<std::size_t>(k)];
        double cx = n1.y() * nk.z() - n1.z() * nk.y();
        double cy = n1.z() * nk.x() - n1.x() * nk.z();
        double cz = n1.x() * nk.y() - n1.y() * nk.x();
        double cn = std::sqrt(cx * cx + cy * cy + cz * cz);
        if (std::abs(axis.x() * cx + axis.y() * cy + axis.z() * cz) / cn < 1e-6) {
            opt.great_circle_partner = k;
            break;
        }
    }
    return opt;
}

bool lexicographically_less(const BlochDirection &a, const BlochDirection &b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

}  // namespace

CubeConventionalResult conventional_cube_optimize(double grid_deg, bool refine) {
    if (!(grid_deg > 0.0) || grid_deg > 90.0) {
        throw std::invalid_argument("grid resolution must be in (0, 90] degrees");
    }
    const CubeGameSetup setup = make_cube_setup();
    const ConventionalModel model(setup);
    const double rad = std::numbers::pi / 180.0;
    const int n_theta = static_cast<int>(std::lround(180.0 / grid_deg)) + 1;
    const int n_phi = static_cast<int>(std::lround(360.0 / grid_deg));

    std::vector<double> values(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    auto at = [&](int t, int p) -> double & {
        return values[static_cast<std::size_t>(t) * static_cast<std::size_t>(n_phi) +
                      static_cast<std::size_t>(p)];
    };
    CubeConventionalResult result;
    result.grid_points = values.size();
    result.grid_best = -1.0;
    BlochDirection grid_axis(0, 0, 1);
    for (int t = 0; t < n_theta; ++t) {
        for (int p = 0; p < n_phi; ++p) {
            auto axis = BlochDirection::from_angles(t * grid_deg * rad, p * grid_deg * rad);
            double v = best_rule(model, axis).second;
            at(t, p) = v;
            if (v > result.grid_best) {
                result.grid_best = v;
                grid_axis = axis;
            }
        }
    }

    // Grid local maxima close to the best are refinement seeds.
    std::vector<std::pair<int, int>> seeds;
    for (int t = 0; t < n_theta; ++t) {
        for (int p = 0; p < n_phi; ++p) {
            double v = at(t, p);
            if (v < result.grid_best - 1e-3) {
                continue;
            }
            bool peak = true;
            for (int dt = -1; dt <= 1 && peak; ++dt) {
                for (int dp = -1; dp <= 1; ++dp) {
                    int tt = t + dt;
                    if ((dt == 0 && dp == 0) || tt < 0 || tt >= n_theta) continue;
                    int pp = (p + dp + n_phi) % n_phi;
                    if (at(tt, pp) > v) {
                        peak = false;
                        break;
                    }
                }
            }
            if (peak) {
                seeds.emplace_back(t, p);
            }
        }
    }

    std::vector<CubeOptimum> optima;
    // Points within one grid step are the same optimum.
    const double same_axis = std::cos(grid_deg * rad);
    auto add_optimum = [&](const BlochDirection &axis) {
        auto [rule, value] = best_rule(model, axis);
        CubeOptimum opt = make_optimum(setup, axis, rule, value);
        for (auto &known : optima) {
            if (std::abs(known.axis.dot(opt.axis)) > same_axis) {
                if (opt.value > known.value) known = opt;
                return;
            }
        }
        optima.push_back(opt);
    };
    if (refine) {
        for (auto [t, p] : seeds) {
            std::vector<double> x0{t * grid_deg * rad, p * grid_deg * rad};
            SimplexOptions opts;
            opts.initial_step = grid_deg * rad;
            opts.size_tolerance = 1e-11;
            auto res = minimize_simplex(
                [&](const std::vector<double> &x) {
                    return -best_rule(model, BlochDirection::from_angles(x[0], x[1])).second;
                },
                x0, opts);
            add_optimum(BlochDirection::from_angles(res.x[0], res.x[1]));
        }
    }
    add_optimum(grid_axis);

    double best_value = -1.0;
    for (const auto &o : optima) best_value = std::max(best_value, o.value);
    for (const auto &o : optima) {
        if (o.value >= best_value - 1e-6) result.equivalent_optima.push_back(o);
    }
    std::sort(result.equivalent_optima.begin(), result.equivalent_optima.end(),
              [](const CubeOptimum &a, const CubeOptimum &b) {
                  if (std::abs(a.value - b.value) > 1e-9) return a.value > b.value;
                  return lexicographically_less(a.axis, b.axis);
              });
    result.best = result.equivalent_optima.front();
    return result;
}

}  // namespace kings
