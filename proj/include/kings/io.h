#ifndef KINGS_IO_H
#define KINGS_IO_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kings/bounds.h"
#include "kings/game.h"
#include "kings/mub.h"
#include "kings/strategy.h"
#include "kings/tolerances.h"

namespace kings::io {

using Json = nlohmann::json;

/// Complex numbers serialize as {"re": x, "im": y}.
Json to_json(Complex z);
Complex complex_from_json(const Json &j);

/// A state is an array of complex amplitudes.
Json to_json(const StateVector &s);
StateVector state_from_json(const Json &j, double tolerance = kDefaultTolerances.construction);

Json to_json(const OrthonormalBasis &b);
OrthonormalBasis basis_from_json(const Json &j);

/// {dim, bases: [{label, states: [[{re, im}, ...], ...]}]}
Json to_json(const MubFamily &f);
MubFamily family_from_json(const Json &j);

Json to_json(const SuccessBreakdown &b);
SuccessBreakdown breakdown_from_json(const Json &j);

Json to_json(const BoundReport &r);
BoundReport bound_report_from_json(const Json &j);

Json to_json(const GameResult &r);
GameResult game_result_from_json(const Json &j);

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    std::uint64_t seed = 0;
    std::string tool_version = KINGS_VERSION;
    Tolerances tolerances = kDefaultTolerances;
    /// UTC, ISO 8601.
    std::string timestamp;
    std::string rng = std::string(Rng::kName);
};

RunManifest make_manifest(std::string command, Json parameters, std::uint64_t seed);
Json to_json(const RunManifest &m);
RunManifest manifest_from_json(const Json &j);

/// Header row plus string cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool operator==(const CsvTable &) const = default;
};

/// RFC 4180 quoting: cells holding commas, quotes or newlines are quoted.
void write_csv(std::ostream &out, const CsvTable &table);
CsvTable read_csv(std::istream &in);

/// Complex columns come in pairs: name_re, name_im.
std::vector<std::string> complex_columns(const std::string &name);

/// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double x, int decimals);
/// `digits` significant figures, never in exponent form.
std::string format_significant(double x, int digits);
/// Shortest representation that parses back to the same double.
std::string format_exact(double x);

/// Writes `{"manifest": ..., "data": ...}`.
void write_json_artifact(const std::filesystem::path &path, const Json &data, const RunManifest &manifest);
/// Reads a file written by write_json_artifact; returns the data member.
Json read_json_artifact(const std::filesystem::path &path, RunManifest *manifest = nullptr);

void write_csv_file(const std::filesystem::path &path, const CsvTable &table);
CsvTable read_csv_file(const std::filesystem::path &path);

}  // namespace kings::io

#endif
