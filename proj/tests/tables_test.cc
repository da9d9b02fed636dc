#include "kings/tables.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "kings/reference.h"

using namespace kings;

TEST(tables, bound_table_row_for_five) {
    auto t = bound_table();
    ASSERT_EQ(t.csv.rows.size(), 6u);
    EXPECT_EQ(t.csv.header, (std::vector<std::string>{"d", "bound"}));
    EXPECT_EQ(t.csv.rows[3], (std::vector<std::string>{"5", "0.6315"}));
    for (std::size_t n = 0; n < 6; ++n) {
        EXPECT_EQ(t.csv.rows[n][1], io::format_fixed(reference::kBoundTable[n].value, 4));
        EXPECT_NEAR(t.json[n]["bound"].get<double>(), reference::kBoundTable[n].value, 5e-5);
    }
}

TEST(tables, two_qubit_bases_use_complex_column_pairs) {
    auto t = two_qubit_basis_table();
    EXPECT_EQ(t.csv.header.size(), 3u + 8u);
    EXPECT_EQ(t.csv.header[3], "a_re");
    EXPECT_EQ(t.csv.header[4], "a_im");
    ASSERT_EQ(t.csv.rows.size(), 20u);
    // First state of basis 2: (1, i, i, -1).
    const auto &row = t.csv.rows[8];
    EXPECT_EQ(std::vector<std::string>(row.begin() + 3, row.end()),
              (std::vector<std::string>{"1", "0", "0", "1", "0", "1", "-1", "0"}));
    EXPECT_EQ(t.json["bases"][0]["scale"], 1.0);
    EXPECT_EQ(t.json["bases"][2]["scale"], 0.5);
}

TEST(tables, signal_state_table_has_thirty_two_rows) {
    auto t = make_table(3);
    ASSERT_EQ(t.csv.rows.size(), 32u);
    EXPECT_EQ(t.csv.rows[0], (std::vector<std::string>{"1", "1", "1", "1", "1", "0", "-1", "0", "-1", "0", "-1"}));
    EXPECT_EQ(t.json.size(), 32u);
}

TEST(tables, measurement_basis_table_matches_reference) {
    auto t = make_table(4);
    ASSERT_EQ(t.csv.rows.size(), 32u);
    for (std::size_t n = 0; n < 32; ++n) {
        for (std::size_t m = 0; m < 4; ++m) {
            EXPECT_EQ(t.csv.rows[n][m + 1], std::to_string(reference::kMeasurementBases[n][m]));
        }
    }
}

TEST(tables, vaa_table_rows_sum_to_one) {
    auto t = vaa_table();
    ASSERT_EQ(t.csv.rows.size(), 8u);
    for (std::size_t r = 0; r < 8; ++r) {
        double sum = 0.0;
        for (std::size_t k = 2; k < 6; ++k) {
            double v = std::stod(t.csv.rows[r][k]);
            EXPECT_NEAR(v, reference::kVaaOverlaps[r][k - 2], 5e-4);
            sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 5e-4);
    }
    EXPECT_EQ(t.csv.rows[6][2], "0.933");
}

TEST(tables, cmd_tables_writes_parseable_files) {
    auto dir = std::filesystem::temp_directory_path() / "kings_tables_test";
    std::filesystem::remove_all(dir);
    auto manifest = io::make_manifest("tables", {{"which", {1, 5}}}, 0);
    auto written = cmd_tables({1, 5}, dir, manifest);
    ASSERT_EQ(written.size(), 4u);
    EXPECT_EQ(io::read_csv_file(dir / "table1.csv"), bound_table().csv);
    EXPECT_EQ(io::read_csv_file(dir / "table5.csv"), vaa_table().csv);
    io::RunManifest m;
    auto data = io::read_json_artifact(dir / "table5.json", &m);
    EXPECT_EQ(data, vaa_table().json);
    EXPECT_EQ(m.command, "tables");
}

TEST(tables, unknown_table_is_rejected) {
    EXPECT_THROW(make_table(6), std::invalid_argument);
    auto dir = std::filesystem::temp_directory_path() / "kings_tables_reject";
    EXPECT_THROW(cmd_tables({0}, dir, io::make_manifest("tables", {}, 0)), std::invalid_argument);
}
