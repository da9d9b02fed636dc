#include "kings/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "kings/bounds.h"
#include "kings/cube.h"
#include "kings/game.h"
#include "kings/io.h"
#include "kings/mub.h"
#include "kings/random.h"
#include "kings/reference.h"
#include "kings/search.h"
#include "kings/strategy.h"

namespace kings {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (!passed) {
                detail << "; ";
            }
            passed = false;
            detail << what;
        }
    }
};

std::string num(double x) { return io::format_significant(x, 6); }

Outcome bound_table_criterion() {
    Outcome out;
    for (const auto &row : reference::kBoundTable) {
        std::string got = io::format_fixed(bound_p(row.d), 4);
        out.require(got == io::format_fixed(row.value, 4),
                    "d=" + std::to_string(row.d) + " gives " + got);
    }
    if (out.passed) {
        out.detail << "6 rows match to 4 decimals";
    }
    return out;
}

Outcome appendix_identities_criterion() {
    Outcome out;
    double worst = 0.0;
    for (int d = 2; d <= 9; ++d) {
        for (int r = 1; r <= d; ++r) {
            worst = std::max(worst, std::abs(total_bound(d, r) - bound_p(d)));
        }
        double edge = (1.0 + std::sqrt(static_cast<double>(d))) / (1.0 + d);
        out.require(std::abs(total_bound(d, 0) - edge) <= 1e-14 && std::abs(total_bound(d, d + 1) - edge) <= 1e-14,
                    "edge value off for d=" + std::to_string(d));
        out.require(edge < bound_p(d), "edge value not below bound for d=" + std::to_string(d));
    }
    out.require(worst <= 1e-14, "interior deviation " + num(worst));
    if (out.passed) {
        out.detail << "max interior deviation " << worst << ", edges strictly below";
    }
    return out;
}

Outcome certification_criterion() {
    Outcome out;
    double worst = 0.0;
    for (int d : {2, 3, 5, 7, 11, 13, 4}) {
        auto report = certify_family(construct_mub(d), 1e-10);
        worst = std::max({worst, report.max_orthonormality_deviation, report.max_unbiasedness_deviation});
        out.require(report.passed, report.summary());
    }
    if (out.passed) {
        out.detail << "7 families, max deviation " << worst;
    }
    return out;
}

Outcome search_criterion() {
    Outcome out;
    auto family = construct_mub(4);
    auto states = find_signal_states(family);
    out.require(states.size() == 32, "found " + std::to_string(states.size()) + " signal states");
    std::set<std::pair<std::array<int, 4>, std::array<int, 3>>> found, published;
    for (const auto &s : states) {
        std::array<int, 4> one_based{};
        for (std::size_t m = 0; m < 4; ++m) {
            one_based[m] = s.indices[m] + 1;
        }
        std::array<int, 3> powers{};
        for (std::size_t m = 0; m < 3; ++m) {
            double angle = std::arg(s.phases[m]) / (std::acos(0.0));
            powers[m] = (static_cast<int>(std::lround(angle)) + 4) % 4;
        }
        found.insert({one_based, powers});
    }
    for (const auto &row : reference::kSignalStates) {
        published.insert({row.tuple, row.phase_power});
        std::array<int, 4> idx{};
        std::array<Complex, 3> phases{};
        for (std::size_t m = 0; m < 4; ++m) {
            idx[m] = row.tuple[m] - 1;
        }
        for (std::size_t m = 0; m < 3; ++m) {
            phases[m] = reference::phase_from_power(row.phase_power[m]);
        }
        auto published_state = StateVector::normalized(signal_combination(family, idx, phases));
        bool matched = std::any_of(states.begin(), states.end(),
                                   [&](const SignalState &s) { return same_ray(s.vector, published_state); });
        out.require(matched, "published state not found");
    }
    out.require(found == published, "signal-state set differs from the published list");

    auto bases = find_measurement_bases(states);
    out.require(bases.size() == 32, "found " + std::to_string(bases.size()) + " measurement bases");
    std::vector<int> membership(states.size(), 0);
    bool first_entry = false;
    for (const auto &b : bases) {
        for (int m : b.members) {
            ++membership[static_cast<std::size_t>(m)];
        }
        first_entry = first_entry || b.members == std::array<int, 4>{0, 10, 21, 31};
    }
    out.require(std::all_of(membership.begin(), membership.end(), [](int c) { return c == 4; }),
                "some state is not in exactly 4 bases");
    out.require(first_entry, "basis {1,11,22,32} missing");
    if (out.passed) {
        out.detail << "32 states match, 32 bases, each state in 4, {1,11,22,32} present";
    }
    return out;
}

Outcome optimum_criterion() {
    Outcome out;
    auto family = construct_mub(4);
    auto states = find_signal_states(family);
    auto bases = find_measurement_bases(states);
    double worst_total = 0.0, worst_f = 0.0, worst_complement = 0.0;
    for (const auto &b : bases) {
        auto s = certify_optimal_strategy(b, states, family);
        auto breakdown = success_exact(s);
        worst_total = std::max(worst_total, std::abs(breakdown.total - 0.7));
        for (double f : breakdown.per_signal) {
            worst_f = std::max(worst_f, std::abs(f - 2.5));
        }
        worst_complement = std::max(worst_complement, std::abs(success_exact_general(complement_strategy(s)) - 0.7));
    }
    out.require(bases.size() == 32, "expected 32 bases");
    out.require(worst_total <= 1e-9, "success off by " + num(worst_total));
    out.require(worst_f <= 1e-9, "F(k) off by " + num(worst_f));
    out.require(worst_complement <= 1e-9, "complement off by " + num(worst_complement));
    if (out.passed) {
        out.detail << "max deviations: success " << worst_total << ", F(k) " << worst_f << ", complement "
                   << worst_complement;
    }
    return out;
}

Outcome impossibility_criterion(std::uint64_t seed) {
    Outcome out;
    auto family = construct_mub(3);
    ImpossibilityOptions options;
    options.seed = derive_seed(seed, 6);
    auto report = certify_d3_impossible(family, options);
    out.require(report.tuples.size() == 27, "expected 27 tuples");
    out.require(report.passed && report.worst_case_min > 1e-3,
                "smallest max-deviation " + num(report.worst_case_min));
    RelaxedMaxOptions relaxed;
    relaxed.seed = derive_seed(seed, 60);
    double gap = 3.0 * overlap_target(3) - relaxed_f_max(family, 0, relaxed).value;
    out.require(gap > 0.0, "relaxed maximum reaches 3p (gap " + num(gap) + ")");
    if (out.passed) {
        out.detail << "smallest max-deviation " << num(report.worst_case_min) << " > 1e-3, relaxed gap " << num(gap);
    }
    return out;
}

Outcome vaa_criterion() {
    Outcome out;
    auto setup = make_cube_setup();
    auto table = vaa_overlap_table(setup);
    double worst = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(table[r][k] - reference::kVaaOverlaps[r][k]));
        }
    }
    out.require(worst <= 5e-4, "table entry off by " + num(worst));
    auto predictions = vaa_prediction_table(setup);
    auto success = vaa_success(setup, predictions);
    const double wrong = 1.0 - (2.0 + std::sqrt(3.0)) / 4.0;
    for (double w : success.wrong_mass) {
        out.require(std::abs(w - wrong) <= 1e-10, "wrong mass " + num(w));
    }
    std::string printed = io::format_significant(success.total, 3);
    out.require(printed == "0.933", "success prints as " + printed);
    out.require(predictions.sign[0] == reference::kChi1Prediction, "chi_1 prediction row differs");
    if (out.passed) {
        out.detail << "32 entries within " << num(worst) << ", success " << printed << ", chi_1 row (+,-,+,+)";
    }
    return out;
}

Outcome conventional_criterion() {
    Outcome out;
    auto result = conventional_cube_optimize(0.25);
    const double expected = (15.0 + std::sqrt(33.0)) / 24.0;
    const auto &best = result.best;
    out.require(std::abs(best.value - expected) <= 1e-4, "optimum " + num(best.value));
    out.require(std::abs(best.angle_to_n1_deg - 100.0) <= 0.5, "angle " + num(best.angle_to_n1_deg));
    out.require(best.great_circle_partner >= 1, "axis not on an n1-nk great circle");
    double baseline = cube_guess_baseline(make_cube_setup());
    out.require(best.value > baseline, "does not beat the baseline");
    if (out.passed) {
        out.detail << "value " << io::format_significant(best.value, 8) << ", angle "
                   << io::format_fixed(best.angle_to_n1_deg, 3) << " deg, great circle with n"
                   << best.great_circle_partner + 1 << ", baseline " << baseline;
    }
    return out;
}

Outcome monte_carlo_criterion(Profile profile, std::uint64_t seed) {
    Outcome out;
    const std::uint64_t trials = monte_carlo_trials(profile);
    auto setup = make_cube_setup();
    auto conventional = conventional_cube_optimize(1.0).best;
    struct Mode {
        const char *name;
        GameStrategy strategy;
        double exact;
    };
    std::vector<Mode> modes{
        {"d2", to_general(known_optimal_strategy(2)), (2.0 * std::sqrt(2.0) + 1.0) / (3.0 * std::sqrt(2.0))},
        {"d4", to_general(known_optimal_strategy(4)), 0.7},
        {"cube-vaa", CubeVaaStrategy{setup, vaa_prediction_table(setup)}, (2.0 + std::sqrt(3.0)) / 4.0},
        {"cube-conv", CubeConventionalStrategy{setup, conventional.axis, conventional.rule},
         (15.0 + std::sqrt(33.0)) / 24.0},
    };
    for (std::size_t m = 0; m < modes.size(); ++m) {
        auto r = run({modes[m].strategy, trials, derive_seed(seed, 90 + m)});
        double z = (r.estimate - modes[m].exact) / r.standard_error;
        out.require(std::abs(z) <= 3.0, std::string(modes[m].name) + " z = " + num(z));
        if (m > 0) {
            out.detail << ", ";
        }
        out.detail << modes[m].name << " " << io::format_fixed(r.estimate, 5) << " (z " << io::format_fixed(z, 2)
                   << ")";
    }
    out.detail << " at " << trials << " trials";
    return out;
}

Outcome property_criterion(std::uint64_t seed) {
    Outcome out;
    double worst_excess = -1.0, worst_regroup = 0.0;
    for (int d : {2, 3, 4}) {
        auto family = construct_mub(d);
        Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(d)));
        const double pd = overlap_target(d) * d;
        for (int n = 0; n < 1000; ++n) {
            int prep_basis = static_cast<int>(rng.below(static_cast<std::uint64_t>(d + 1)));
            int prep_index = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
            auto s = make_strategy(family, prep_basis, prep_index,
                                   random_basis(static_cast<std::size_t>(d), rng, -1));
            out.require(s.assignment.well_conditioned(), "ill-conditioned strategy");
            auto b = success_exact(s);
            for (double f : b.per_signal) {
                worst_excess = std::max(worst_excess, f - pd);
            }
            worst_regroup = std::max(worst_regroup, std::abs(b.total - b.total_regrouped));
        }
    }
    out.require(worst_excess <= 1e-9, "F(k) exceeds pd by " + num(worst_excess));
    out.require(worst_regroup <= 1e-12, "regrouping differs by " + num(worst_regroup));

    auto strategy = to_general(known_optimal_strategy(4));
    auto first = run({strategy, 20000, seed});
    auto second = run({strategy, 20000, seed});
    out.require(first == second, "repeated runs differ");
    Rng a(seed), b(seed);
    bool same_stream = true;
    for (int n = 0; n < 1000; ++n) {
        same_stream = same_stream && a.next() == b.next();
    }
    out.require(same_stream, "generator streams differ");
    if (out.passed) {
        out.detail << "3000 strategies, max F(k) - pd " << num(worst_excess) << ", regrouping " << worst_regroup
                   << ", repeated runs identical";
    }
    return out;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult &c) { return c.passed; });
}

std::uint64_t monte_carlo_trials(Profile profile) { return profile == Profile::kQuick ? 100000 : 1000000; }

VerifyReport run_acceptance(Profile profile, std::uint64_t seed) {
    struct Spec {
        int id;
        const char *name;
        double budget;
        std::function<Outcome()> check;
    };
    const std::vector<Spec> specs{
        {1, "bound table", 1e-3, bound_table_criterion},
        {2, "bound identities", 1e-3, appendix_identities_criterion},
        {3, "MUB certification", 1.0, certification_criterion},
        {4, "d=4 search", 10.0, search_criterion},
        {5, "d=4 optimum", 0.0, optimum_criterion},
        {6, "d=3 impossibility", 60.0, [seed] { return impossibility_criterion(seed); }},
        {7, "cube VAA", 0.0, vaa_criterion},
        {8, "cube conventional optimum", 0.0, conventional_criterion},
        {9, "Monte Carlo", 60.0, [profile, seed] { return monte_carlo_criterion(profile, seed); }},
        {10, "properties", 0.0, [seed] { return property_criterion(seed); }},
    };
    VerifyReport report;
    report.profile = profile;
    report.seed = seed;
    for (const auto &spec : specs) {
        CriterionResult r;
        r.id = spec.id;
        r.name = spec.name;
        r.budget_seconds = spec.budget;
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = spec.check();
            r.passed = o.passed;
            r.detail = o.detail.str();
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.budget_seconds > 0.0 && r.seconds >= r.budget_seconds) {
            r.passed = false;
            r.detail += "; over the " + io::format_significant(r.budget_seconds, 3) + " s budget";
        }
        report.criteria.push_back(std::move(r));
    }
    return report;
}

std::string format_line(const CriterionResult &r) {
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
         << io::format_significant(r.seconds, 3) << " s)";
    return line.str();
}

}  // namespace kings
