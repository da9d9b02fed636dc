#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kings/bounds.h"
#include "kings/cube.h"
#include "kings/game.h"
#include "kings/io.h"
#include "kings/mub.h"
#include "kings/search.h"
#include "kings/strategy.h"
#include "kings/tables.h"
#include "kings/verify.h"

namespace {

using kings::io::Json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 20240601;
    double tolerance = kings::kDefaultTolerances.comparison;
    std::string emit = "text";
    std::string outdir = ".";
};

std::set<std::string> split_list(const std::string &s) {
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.insert(item);
        }
    }
    return out;
}

kings::io::RunManifest manifest(const Globals &g, const std::string &command, Json parameters) {
    auto m = kings::io::make_manifest(command, std::move(parameters), g.seed);
    m.tolerances.comparison = g.tolerance;
    return m;
}

void print_artifact(const Json &data, const kings::io::RunManifest &m) {
    std::cout << Json{{"manifest", kings::io::to_json(m)}, {"data", data}}.dump(2) << '\n';
}

void write_pair(const std::filesystem::path &dir, const std::string &stem, const kings::TableArtifact &t,
                const kings::io::RunManifest &m) {
    std::filesystem::create_directories(dir);
    kings::io::write_csv_file(dir / (stem + ".csv"), t.csv);
    kings::io::write_json_artifact(dir / (stem + ".json"), t.json, m);
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << " and " << (dir / (stem + ".json")).string()
              << '\n';
}

void require_emit(const std::string &emit, const std::set<std::string> &allowed) {
    if (!allowed.count(emit)) {
        std::string list;
        for (const auto &a : allowed) {
            list += (list.empty() ? "" : ", ") + a;
        }
        throw UsageError("--emit " + emit + " not supported here; expected one of: " + list);
    }
}

std::string fmt(double x) { return kings::io::format_significant(x, 10); }

// mub -------------------------------------------------------------------------

int cmd_mub(const Globals &g, int d) {
    require_emit(g.emit, {"text", "json", "csv"});
    auto family = kings::construct_mub(d);
    auto report = kings::certify_family(family, g.tolerance);
    if (g.emit == "json") {
        print_artifact(kings::io::to_json(family), manifest(g, "mub", {{"d", d}}));
    } else if (g.emit == "csv") {
        kings::io::CsvTable t;
        t.header = {"label", "state"};
        for (int k = 0; k < d; ++k) {
            for (auto &c : kings::io::complex_columns("c" + std::to_string(k))) {
                t.header.push_back(c);
            }
        }
        for (const auto &b : family.bases()) {
            for (std::size_t j = 0; j < b.states.size(); ++j) {
                std::vector<std::string> row{std::to_string(b.label), std::to_string(j)};
                for (auto z : b.states[j].amplitudes()) {
                    row.push_back(kings::io::format_exact(z.real()));
                    row.push_back(kings::io::format_exact(z.imag()));
                }
                t.rows.push_back(std::move(row));
            }
        }
        kings::io::write_csv(std::cout, t);
    } else {
        std::cout << report.summary() << '\n';
    }
    return report.passed ? kOk : kFailure;
}

// bound -----------------------------------------------------------------------

int cmd_bound(const Globals &g, int d, std::optional<int> r, bool table1) {
    if (table1) {
        kings::io::write_csv(std::cout, kings::bound_table().csv);
        return kOk;
    }
    require_emit(g.emit, {"text", "json"});
    if (d < 2) {
        throw UsageError("--d must be at least 2");
    }
    auto report = kings::bound_report(d, r);
    if (g.emit == "json") {
        print_artifact(kings::io::to_json(report), manifest(g, "bound", {{"d", d}, {"r", r ? Json(*r) : Json()}}));
    } else {
        std::cout << "d=" << d;
        if (r) {
            std::cout << " r=" << *r;
        }
        std::cout << " bound=" << fmt(report.value) << " formula=" << kings::to_string(report.formula) << '\n';
    }
    return kOk;
}

// eval ------------------------------------------------------------------------

int cmd_eval(const Globals &g, int d, const std::string &control, int prep_basis, int prep_index) {
    require_emit(g.emit, {"text", "json"});
    auto strategy = [&] {
        if (control == "builtin") {
            if (d != 2 && d != 4) {
                throw UsageError("the builtin control basis exists for d = 2 and d = 4 only");
            }
            auto known = kings::known_optimal_strategy(d);
            return kings::make_strategy(known.family, prep_basis, prep_index, known.control);
        }
        std::ifstream in(control);
        if (!in) {
            throw UsageError("cannot read control basis file " + control);
        }
        Json j = Json::parse(in);
        if (j.contains("data")) {
            j = j.at("data");
        }
        auto basis = kings::io::basis_from_json(j);
        if (basis.dim() != static_cast<std::size_t>(d)) {
            throw UsageError("control basis has dimension " + std::to_string(basis.dim()));
        }
        return kings::make_strategy(kings::construct_mub(d), prep_basis, prep_index, basis);
    }();
    auto breakdown = kings::success_exact(strategy);
    if (g.emit == "json") {
        print_artifact(kings::io::to_json(breakdown),
                       manifest(g, "eval", {{"d", d}, {"control", control}, {"prep_basis", prep_basis},
                                            {"prep_index", prep_index}}));
    } else {
        std::cout << "success=" << fmt(breakdown.total) << " regrouped=" << fmt(breakdown.total_regrouped)
                  << " bound=" << fmt(kings::bound_p(d)) << '\n';
        for (auto [label, p] : breakdown.per_basis) {
            std::cout << "  basis " << label << ": " << fmt(p) << '\n';
        }
        for (std::size_t k = 0; k < breakdown.per_signal.size(); ++k) {
            std::cout << "  F(" << k << ") = " << fmt(breakdown.per_signal[k]) << '\n';
        }
    }
    return kOk;
}

// search ----------------------------------------------------------------------

int cmd_search(const Globals &g, int d) {
    if (d == 4) {
        auto family = kings::construct_mub(4);
        auto states = kings::find_signal_states(family);
        auto bases = kings::find_measurement_bases(states);
        std::cout << states.size() << " signal states, " << bases.size() << " measurement bases\n";
        if (g.emit == "text") {
            return kOk;
        }
        auto targets = split_list(g.emit);
        for (const auto &t : targets) {
            if (t != "table3" && t != "table4") {
                throw UsageError("--emit for search --d 4 takes table3 and/or table4");
            }
        }
        auto m = manifest(g, "search", {{"d", 4}, {"emit", g.emit}});
        if (targets.count("table3")) {
            write_pair(g.outdir, "table3", kings::signal_state_table(states), m);
        }
        if (targets.count("table4")) {
            write_pair(g.outdir, "table4", kings::measurement_basis_table(bases), m);
        }
        return kOk;
    }
    if (d == 3) {
        require_emit(g.emit, {"text", "json"});
        kings::ImpossibilityOptions options;
        options.seed = g.seed;
        auto report = kings::certify_d3_impossible(kings::construct_mub(3), options);
        if (g.emit == "json") {
            Json tuples = Json::array();
            for (const auto &t : report.tuples) {
                tuples.push_back({{"indices", t.indices},
                                  {"optimizer_min", t.optimizer_min},
                                  {"grid_min", t.grid_min},
                                  {"single_overlap_residual", t.single_overlap_residual}});
            }
            print_artifact({{"delta", report.delta},
                            {"target", report.target},
                            {"worst_case_min", report.worst_case_min},
                            {"passed", report.passed},
                            {"tuples", tuples}},
                           manifest(g, "search", {{"d", 3}}));
        } else {
            std::cout << "target overlap " << fmt(report.target) << ", smallest max-deviation "
                      << fmt(report.worst_case_min) << " over " << report.tuples.size() << " tuples: "
                      << (report.passed ? "no signal state exists" : "NOT certified") << '\n';
        }
        return report.passed ? kOk : kFailure;
    }
    throw UsageError("search supports --d 3 and --d 4");
}

// cube ------------------------------------------------------------------------

int cmd_cube_vaa(const Globals &g) {
    auto setup = kings::make_cube_setup();
    auto predictions = kings::vaa_prediction_table(setup);
    auto success = kings::vaa_success(setup, predictions);
    if (g.emit == "table5") {
        write_pair(g.outdir, "table5", kings::vaa_table(), manifest(g, "cube vaa", {{"emit", "table5"}}));
        return kOk;
    }
    require_emit(g.emit, {"text", "json", "table5"});
    if (g.emit == "json") {
        Json signs = Json::array();
        for (const auto &row : predictions.sign) {
            signs.push_back(row);
        }
        print_artifact({{"success", success.total}, {"wrong_mass", success.wrong_mass}, {"predictions", signs}},
                       manifest(g, "cube vaa", Json::object()));
        return kOk;
    }
    std::cout << "VAA success " << kings::io::format_significant(success.total, 3) << " (" << fmt(success.total)
              << ")\n";
    for (std::size_t k = 0; k < 4; ++k) {
        std::cout << "  chi_" << k + 1 << " predicts";
        for (int s : predictions.sign[k]) {
            std::cout << ' ' << (s > 0 ? '+' : '-');
        }
        std::cout << '\n';
    }
    return kOk;
}

Json to_json(const kings::CubeOptimum &o) {
    return {{"axis", {o.axis.x(), o.axis.y(), o.axis.z()}},
            {"rule_sign_on_plus", o.rule.sign_on_plus},
            {"value", o.value},
            {"angle_to_n1_deg", o.angle_to_n1_deg},
            {"great_circle_partner", o.great_circle_partner < 0 ? Json() : Json(o.great_circle_partner + 1)}};
}

int cmd_cube_conventional(const Globals &g, double grid_deg) {
    require_emit(g.emit, {"text", "json"});
    auto result = kings::conventional_cube_optimize(grid_deg);
    if (g.emit == "json") {
        Json optima = Json::array();
        for (const auto &o : result.equivalent_optima) {
            optima.push_back(to_json(o));
        }
        print_artifact({{"best", to_json(result.best)},
                        {"equivalent_optima", optima},
                        {"grid_best", result.grid_best},
                        {"grid_points", result.grid_points},
                        {"baseline", kings::cube_guess_baseline(kings::make_cube_setup())}},
                       manifest(g, "cube conventional", {{"grid_deg", grid_deg}}));
        return kOk;
    }
    const auto &b = result.best;
    std::cout << "optimum " << fmt(b.value) << " along (" << fmt(b.axis.x()) << ", " << fmt(b.axis.y()) << ", "
              << fmt(b.axis.z()) << "), " << kings::io::format_fixed(b.angle_to_n1_deg, 3) << " deg from n1";
    if (b.great_circle_partner >= 0) {
        std::cout << ", on the n1-n" << b.great_circle_partner + 1 << " great circle";
    }
    std::cout << "\n" << result.equivalent_optima.size() << " equivalent optima, " << result.grid_points
              << " grid points\n";
    return kOk;
}

// simulate --------------------------------------------------------------------

int cmd_simulate(const Globals &g, const std::string &mode, std::uint64_t trials) {
    require_emit(g.emit, {"text", "json"});
    auto setup = kings::make_cube_setup();
    auto [strategy, exact] = [&]() -> std::pair<kings::GameStrategy, double> {
        if (mode == "d2" || mode == "d4") {
            auto s = kings::known_optimal_strategy(mode == "d2" ? 2 : 4);
            return {kings::to_general(s), kings::success_exact(s).total};
        }
        if (mode == "cube-vaa") {
            kings::CubeVaaStrategy s{setup, kings::vaa_prediction_table(setup)};
            return {s, kings::vaa_success(setup, s.table).total};
        }
        if (mode == "cube-conv") {
            auto best = kings::conventional_cube_optimize(1.0).best;
            return {kings::CubeConventionalStrategy{setup, best.axis, best.rule}, best.value};
        }
        throw UsageError("--mode must be d2, d4, cube-vaa or cube-conv");
    }();
    auto result = kings::run({strategy, trials, g.seed});
    if (g.emit == "json") {
        Json data = kings::io::to_json(result);
        data["exact"] = exact;
        print_artifact(data, manifest(g, "simulate", {{"mode", mode}, {"trials", trials}}));
    } else {
        std::cout << mode << ": " << result.successes << "/" << result.trials << " = " << fmt(result.estimate)
                  << " +- " << fmt(result.standard_error) << " (exact " << fmt(exact) << ")\n";
    }
    return kOk;
}

// tables / verify -------------------------------------------------------------

int cmd_tables(const Globals &g, const std::string &which) {
    std::set<int> tables;
    for (const auto &item : split_list(which)) {
        try {
            tables.insert(std::stoi(item));
        } catch (const std::exception &) {
            throw UsageError("--which takes table numbers 1..5");
        }
    }
    for (int n : tables) {
        if (n < 1 || n > 5) {
            throw UsageError("--which takes table numbers 1..5");
        }
    }
    auto written = kings::cmd_tables(tables, g.outdir, manifest(g, "tables", {{"which", tables}}));
    for (const auto &p : written) {
        std::cout << "wrote " << p.string() << '\n';
    }
    return kOk;
}

int cmd_verify(const Globals &g, const std::string &profile_name) {
    require_emit(g.emit, {"text", "json"});
    kings::Profile profile;
    if (profile_name == "quick") {
        profile = kings::Profile::kQuick;
    } else if (profile_name == "full") {
        profile = kings::Profile::kFull;
    } else {
        throw UsageError("--profile must be quick or full");
    }
    auto report = kings::run_acceptance(profile, g.seed);
    if (g.emit == "json") {
        Json criteria = Json::array();
        for (const auto &c : report.criteria) {
            criteria.push_back({{"id", c.id},
                                {"name", c.name},
                                {"passed", c.passed},
                                {"detail", c.detail},
                                {"seconds", c.seconds},
                                {"budget_seconds", c.budget_seconds}});
        }
        print_artifact({{"profile", profile_name}, {"passed", report.passed()}, {"criteria", criteria}},
                       manifest(g, "verify", {{"profile", profile_name}}));
    } else {
        for (const auto &c : report.criteria) {
            std::cout << kings::format_line(c) << '\n';
        }
    }
    return report.passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mean king retrodiction toolkit"};
    app.set_version_flag("--version", std::string(KINGS_VERSION));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Master seed for randomized steps");
    app.add_option("--tolerance", g.tolerance, "Comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--emit", g.emit, "Output format: text, json, csv or a table list");
    app.add_option("--outdir", g.outdir, "Directory for written tables");

    int d = 0;
    std::optional<int> r;
    bool table1 = false;
    std::string control = "builtin";
    int prep_basis = 0;
    int prep_index = 0;
    double grid_deg = 0.25;
    std::string mode;
    std::uint64_t trials = 100000;
    std::string which = "1,2,3,4,5";
    std::string profile = "full";

    auto *mub = app.add_subcommand("mub", "Construct and certify a mutually unbiased family");
    mub->add_option("--d", d, "Dimension (prime or 4)")->required();

    auto *bound = app.add_subcommand("bound", "Conventional success bounds");
    bound->add_option("--d", d, "Dimension");
    bound->add_option("--r", r, "Number of guessed bases");
    bound->add_flag("--table1", table1, "Print the bound table as CSV");

    auto *eval = app.add_subcommand("eval", "Exact success of a conventional strategy");
    eval->add_option("--d", d, "Dimension")->required();
    eval->add_option("--control", control, "builtin, or a JSON file holding a basis");
    eval->add_option("--prep-basis", prep_basis, "Label of the prepared state's basis");
    eval->add_option("--prep-index", prep_index, "Index of the prepared state");

    auto *search = app.add_subcommand("search", "Signal-state search (d=4) or impossibility check (d=3)");
    search->add_option("--d", d, "3 or 4")->required();

    auto *cube = app.add_subcommand("cube", "Cube body-diagonal variant");
    cube->require_subcommand(1);
    auto *vaa = cube->add_subcommand("vaa", "Entangled strategy with the VAA basis");
    auto *conventional = cube->add_subcommand("conventional", "Best single-qubit strategy");
    conventional->add_option("--grid-deg", grid_deg, "Grid spacing in degrees")->check(CLI::PositiveNumber);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo play");
    simulate->add_option("--mode", mode, "d2, d4, cube-vaa or cube-conv")->required();
    simulate->add_option("--trials", trials, "Number of rounds")->check(CLI::PositiveNumber);

    auto *tables = app.add_subcommand("tables", "Write the reproduced tables");
    tables->add_option("--which", which, "Comma-separated table numbers");

    auto *verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_option("--profile", profile, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*mub) return cmd_mub(g, d);
        if (*bound) {
            if (!table1 && bound->count("--d") == 0) {
                throw UsageError("bound needs --d or --table1");
            }
            return cmd_bound(g, d, r, table1);
        }
        if (*eval) return cmd_eval(g, d, control, prep_basis, prep_index);
        if (*search) return cmd_search(g, d);
        if (*vaa) return cmd_cube_vaa(g);
        if (*conventional) return cmd_cube_conventional(g, grid_deg);
        if (*simulate) return cmd_simulate(g, mode, trials);
        if (*tables) return cmd_tables(g, which);
        if (*verify) return cmd_verify(g, profile);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
