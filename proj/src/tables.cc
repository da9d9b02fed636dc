#include "kings/tables.h"

#include <array>
#include <stdexcept>
#include <string>

#include "kings/bounds.h"
#include "kings/cube.h"

namespace kings {

namespace {

constexpr std::array<const char *, 5> kObservables{"Z1,1Z", "X1,1X", "Y1,1Y", "XY,YZ", "YX,ZY"};

void append_complex(std::vector<std::string> &row, Complex z, int decimals) {
    row.push_back(io::format_fixed(z.real(), decimals));
    row.push_back(io::format_fixed(z.imag(), decimals));
}

void append_columns(std::vector<std::string> &header, const std::string &name) {
    for (auto &c : io::complex_columns(name)) {
        header.push_back(c);
    }
}

}  // namespace

TableArtifact bound_table() {
    TableArtifact t;
    t.csv.header = {"d", "bound"};
    t.json = io::Json::array();
    for (int d : {2, 3, 4, 5, 8, 9}) {
        double p = bound_p(d);
        t.csv.rows.push_back({std::to_string(d), io::format_fixed(p, 4)});
        t.json.push_back({{"d", d}, {"bound", p}});
    }
    return t;
}

TableArtifact two_qubit_basis_table() {
    TableArtifact t;
    t.csv.header = {"basis", "observables", "state"};
    for (const char *name : {"a", "b", "c", "d"}) {
        append_columns(t.csv.header, name);
    }
    auto rows = two_qubit_quadruples();
    io::Json bases = io::Json::array();
    for (std::size_t label = 0; label < rows.size(); ++label) {
        io::Json states = io::Json::array();
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<std::string> row{std::to_string(label), kObservables[label], std::to_string(j + 1)};
            io::Json entries = io::Json::array();
            for (Complex z : rows[label][j]) {
                append_complex(row, z, 0);
                entries.push_back(io::to_json(z));
            }
            t.csv.rows.push_back(std::move(row));
            states.push_back(std::move(entries));
        }
        bases.push_back({{"label", label},
                         {"observables", kObservables[label]},
                         {"scale", label == 0 ? 1.0 : 0.5},
                         {"states", states}});
    }
    t.json = {{"bases", bases}};
    return t;
}

TableArtifact signal_state_table(const std::vector<SignalState> &states) {
    TableArtifact t;
    t.csv.header = {"n", "i", "j", "k", "l"};
    for (const char *name : {"b", "c", "d"}) {
        append_columns(t.csv.header, name);
    }
    t.json = io::Json::array();
    for (std::size_t n = 0; n < states.size(); ++n) {
        const auto &s = states[n];
        std::vector<std::string> row{std::to_string(n + 1)};
        for (int idx : s.indices) {
            row.push_back(std::to_string(idx + 1));
        }
        io::Json phases = io::Json::array();
        for (Complex z : s.phases) {
            append_complex(row, z, 0);
            phases.push_back(io::to_json(z));
        }
        t.csv.rows.push_back(std::move(row));
        std::array<int, 4> one_based{};
        for (std::size_t m = 0; m < 4; ++m) {
            one_based[m] = s.indices[m] + 1;
        }
        t.json.push_back({{"n", n + 1}, {"tuple", one_based}, {"phases", phases}, {"state", io::to_json(s.vector)}});
    }
    return t;
}

TableArtifact measurement_basis_table(const std::vector<MeasurementBasis4> &bases) {
    TableArtifact t;
    t.csv.header = {"n", "s1", "s2", "s3", "s4"};
    t.json = io::Json::array();
    for (std::size_t n = 0; n < bases.size(); ++n) {
        std::vector<std::string> row{std::to_string(n + 1)};
        std::array<int, 4> members{};
        for (std::size_t m = 0; m < 4; ++m) {
            members[m] = bases[n].members[m] + 1;
            row.push_back(std::to_string(members[m]));
        }
        t.csv.rows.push_back(std::move(row));
        t.json.push_back({{"n", n + 1}, {"members", members}});
    }
    return t;
}

TableArtifact vaa_table() {
    auto overlaps = vaa_overlap_table(make_cube_setup());
    TableArtifact t;
    t.csv.header = {"diagonal", "sign", "chi1", "chi2", "chi3", "chi4"};
    t.json = io::Json::array();
    for (std::size_t r = 0; r < overlaps.size(); ++r) {
        std::string sign = r % 2 == 0 ? "+" : "-";
        std::vector<std::string> row{std::to_string(r / 2 + 1), sign};
        for (double v : overlaps[r]) {
            row.push_back(io::format_significant(v, 3));
        }
        t.csv.rows.push_back(std::move(row));
        t.json.push_back({{"diagonal", r / 2 + 1}, {"sign", sign}, {"overlaps", overlaps[r]}});
    }
    return t;
}

TableArtifact make_table(int n) {
    switch (n) {
    case 1:
        return bound_table();
    case 2:
        return two_qubit_basis_table();
    case 3:
        return signal_state_table(find_signal_states(construct_mub(4)));
    case 4:
        return measurement_basis_table(find_measurement_bases(find_signal_states(construct_mub(4))));
    case 5:
        return vaa_table();
    default:
        throw std::invalid_argument("no table " + std::to_string(n) + "; expected 1..5");
    }
}

std::vector<std::filesystem::path> cmd_tables(const std::set<int> &which, const std::filesystem::path &outdir,
                                              const io::RunManifest &manifest) {
    for (int n : which) {
        if (n < 1 || n > 5) {
            throw std::invalid_argument("no table " + std::to_string(n) + "; expected 1..5");
        }
    }
    std::filesystem::create_directories(outdir);
    std::vector<std::filesystem::path> written;
    for (int n : which) {
        TableArtifact t = make_table(n);
        auto stem = outdir / ("table" + std::to_string(n));
        auto csv = stem;
        csv += ".csv";
        auto json = stem;
        json += ".json";
        io::write_csv_file(csv, t.csv);
        io::write_json_artifact(json, t.json, manifest);
        written.push_back(csv);
        written.push_back(json);
    }
    return written;
}

}  // namespace kings
