#ifndef KINGS_TABLES_H
#define KINGS_TABLES_H

#include <filesystem>
#include <set>
#include <vector>

#include "kings/io.h"
#include "kings/search.h"

namespace kings {

/// A reproduced table: rounded CSV plus a full-precision JSON mirror.
struct TableArtifact {
    io::CsvTable csv;
    io::Json json;
};

/// Conventional bound for d = 2, 3, 4, 5, 8, 9 to four decimals.
TableArtifact bound_table();
/// The five two-qubit bases as unnormalized quadruples; bases 1-4 carry a
/// factor 1/2.
TableArtifact two_qubit_basis_table();
/// Signal states, 1-based tuples and phases (b, c, d).
TableArtifact signal_state_table(const std::vector<SignalState> &states);
/// Measurement bases as 1-based signal-state numbers.
TableArtifact measurement_basis_table(const std::vector<MeasurementBasis4> &bases);
/// Overlaps of the VAA states with the collapsed object-ancilla states,
/// three significant figures.
TableArtifact vaa_table();

/// Builds table `n` (1..5).
TableArtifact make_table(int n);

/// Writes table{n}.csv and table{n}.json for each requested table into
/// `outdir`, which is created if missing. Returns the paths written.
std::vector<std::filesystem::path> cmd_tables(const std::set<int> &which, const std::filesystem::path &outdir,
                                              const io::RunManifest &manifest);

}  // namespace kings

#endif
