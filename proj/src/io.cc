#include "kings/io.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kings::io {

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json &j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Json to_json(const StateVector &s) {
    Json out = Json::array();
    for (Complex z : s.amplitudes()) {
        out.push_back(to_json(z));
    }
    return out;
}

StateVector state_from_json(const Json &j, double tolerance) {
    std::vector<Complex> amps;
    for (const auto &z : j) {
        amps.push_back(complex_from_json(z));
    }
    return StateVector::from_amplitudes(std::move(amps), tolerance);
}

Json to_json(const OrthonormalBasis &b) {
    Json states = Json::array();
    for (const auto &s : b.states) {
        states.push_back(to_json(s));
    }
    return Json{{"label", b.label}, {"states", states}};
}

OrthonormalBasis basis_from_json(const Json &j) {
    OrthonormalBasis b;
    b.label = j.at("label").get<int>();
    for (const auto &s : j.at("states")) {
        b.states.push_back(state_from_json(s));
    }
    return b;
}

Json to_json(const MubFamily &f) {
    Json bases = Json::array();
    for (const auto &b : f.bases()) {
        bases.push_back(to_json(b));
    }
    return Json{{"dim", f.dim()}, {"bases", bases}};
}

MubFamily family_from_json(const Json &j) {
    std::vector<OrthonormalBasis> bases;
    for (const auto &b : j.at("bases")) {
        bases.push_back(basis_from_json(b));
    }
    return MubFamily(j.at("dim").get<std::size_t>(), std::move(bases));
}

Json to_json(const SuccessBreakdown &b) {
    Json per_basis = Json::object();
    for (auto [label, p] : b.per_basis) {
        per_basis[std::to_string(label)] = p;
    }
    return Json{{"dim", b.dim},
                {"total", b.total},
                {"per_basis", per_basis},
                {"per_signal", b.per_signal},
                {"total_regrouped", b.total_regrouped}};
}

SuccessBreakdown breakdown_from_json(const Json &j) {
    SuccessBreakdown b;
    b.dim = j.at("dim").get<std::size_t>();
    b.total = j.at("total").get<double>();
    for (const auto &[key, value] : j.at("per_basis").items()) {
        b.per_basis[std::stoi(key)] = value.get<double>();
    }
    b.per_signal = j.at("per_signal").get<std::vector<double>>();
    b.total_regrouped = j.at("total_regrouped").get<double>();
    return b;
}

namespace {

BoundFormula formula_from_string(const std::string &s) {
    for (auto f : {BoundFormula::kEq1, BoundFormula::kA1, BoundFormula::kA7, BoundFormula::kA8, BoundFormula::kA9}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw std::invalid_argument("unknown bound formula: " + s);
}

}  // namespace

Json to_json(const BoundReport &r) {
    Json out{{"d", r.d}, {"value", r.value}, {"formula", to_string(r.formula)}};
    out["r"] = r.r ? Json(*r.r) : Json(nullptr);
    return out;
}

BoundReport bound_report_from_json(const Json &j) {
    BoundReport r;
    r.d = j.at("d").get<int>();
    if (!j.at("r").is_null()) {
        r.r = j.at("r").get<int>();
    }
    r.value = j.at("value").get<double>();
    r.formula = formula_from_string(j.at("formula").get<std::string>());
    return r;
}

Json to_json(const GameResult &r) {
    Json per_basis = Json::object();
    for (const auto &[label, t] : r.per_basis) {
        per_basis[std::to_string(label)] = Json{{"chosen", t.chosen}, {"successes", t.successes}};
    }
    return Json{{"successes", r.successes}, {"trials", r.trials},   {"estimate", r.estimate},
                {"stderr", r.standard_error}, {"per_basis", per_basis}, {"rng", r.rng},
                {"seed", r.seed}};
}

GameResult game_result_from_json(const Json &j) {
    GameResult r;
    r.successes = j.at("successes").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.estimate = j.at("estimate").get<double>();
    r.standard_error = j.at("stderr").get<double>();
    for (const auto &[key, value] : j.at("per_basis").items()) {
        r.per_basis[std::stoi(key)] = {value.at("chosen").get<std::uint64_t>(),
                                       value.at("successes").get<std::uint64_t>()};
    }
    r.rng = j.at("rng").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

RunManifest make_manifest(std::string command, Json parameters, std::uint64_t seed) {
    RunManifest m;
    m.command = std::move(command);
    m.parameters = std::move(parameters);
    m.seed = seed;
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    m.timestamp = buf;
    return m;
}

Json to_json(const RunManifest &m) {
    return Json{{"command", m.command},
                {"parameters", m.parameters},
                {"seed", m.seed},
                {"tool_version", m.tool_version},
                {"tolerances",
                 {{"construction", m.tolerances.construction},
                  {"comparison", m.tolerances.comparison},
                  {"overlap_match", m.tolerances.overlap_match},
                  {"probability_sum", m.tolerances.probability_sum}}},
                {"timestamp", m.timestamp},
                {"rng", m.rng}};
}

RunManifest manifest_from_json(const Json &j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.tool_version = j.at("tool_version").get<std::string>();
    const Json &t = j.at("tolerances");
    m.tolerances.construction = t.at("construction").get<double>();
    m.tolerances.comparison = t.at("comparison").get<double>();
    m.tolerances.overlap_match = t.at("overlap_match").get<double>();
    m.tolerances.probability_sum = t.at("probability_sum").get<double>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.rng = j.at("rng").get<std::string>();
    return m;
}

namespace {

void write_cell(std::ostream &out, const std::string &cell) {
    if (cell.find_first_of(",\"\r\n") == std::string::npos) {
        out << cell;
        return;
    }
    out << '"';
    for (char c : cell) {
        if (c == '"') {
            out << '"';
        }
        out << c;
    }
    out << '"';
}

void write_row(std::ostream &out, const std::vector<std::string> &row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) {
            out << ',';
        }
        write_cell(out, row[k]);
    }
    out << '\n';
}

// Parses one record; returns false at end of input.
bool read_record(std::istream &in, std::vector<std::string> &record) {
    record.clear();
    if (in.peek() == std::char_traits<char>::eof()) {
        return false;
    }
    std::string cell;
    bool quoted = false;
    char c;
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    cell += '"';
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (quoted) {
        throw std::runtime_error("read_csv: unterminated quoted cell");
    }
    record.push_back(std::move(cell));
    return true;
}

}  // namespace

void write_csv(std::ostream &out, const CsvTable &table) {
    write_row(out, table.header);
    for (const auto &row : table.rows) {
        if (row.size() != table.header.size()) {
            throw std::invalid_argument("write_csv: row width differs from header");
        }
        write_row(out, row);
    }
}

CsvTable read_csv(std::istream &in) {
    CsvTable t;
    std::vector<std::string> record;
    if (!read_record(in, t.header)) {
        throw std::runtime_error("read_csv: empty input");
    }
    while (read_record(in, record)) {
        if (record.size() != t.header.size()) {
            throw std::runtime_error("read_csv: row " + std::to_string(t.rows.size() + 1) +
                                     " has " + std::to_string(record.size()) + " cells, header has " +
                                     std::to_string(t.header.size()));
        }
        t.rows.push_back(record);
    }
    return t;
}

std::vector<std::string> complex_columns(const std::string &name) { return {name + "_re", name + "_im"}; }

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string s = buf;
    // Avoid "-0.0000".
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string format_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) {
        return format_fixed(x, digits - 1);
    }
    int magnitude = static_cast<int>(std::floor(std::log10(std::abs(x))));
    return format_fixed(x, std::max(0, digits - 1 - magnitude));
}

std::string format_exact(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_exact: conversion failed");
    }
    return std::string(buf, end);
}

void write_json_artifact(const std::filesystem::path &path, const Json &data, const RunManifest &manifest) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << Json{{"manifest", to_json(manifest)}, {"data", data}}.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

Json read_json_artifact(const std::filesystem::path &path, RunManifest *manifest) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    Json j = Json::parse(in);
    if (manifest != nullptr) {
        *manifest = manifest_from_json(j.at("manifest"));
    }
    return j.at("data");
}

void write_csv_file(const std::filesystem::path &path, const CsvTable &table) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_csv(out, table);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

CsvTable read_csv_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_csv(in);
}

}  // namespace kings::io
