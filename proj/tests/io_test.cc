#include "kings/io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "kings/random.h"

using namespace kings;

namespace {

std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("kings_io_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void expect_same_family(const MubFamily &a, const MubFamily &b) {
    ASSERT_EQ(a.dim(), b.dim());
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t m = 0; m < a.size(); ++m) {
        EXPECT_EQ(a.bases()[m].label, b.bases()[m].label);
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                EXPECT_EQ(a.bases()[m][j][k], b.bases()[m][j][k]);
    }
}

}  // namespace

TEST(io_json, complex_layout) {
    auto j = io::to_json(Complex{0.25, -1.5});
    EXPECT_EQ(j.dump(), R"({"im":-1.5,"re":0.25})");
    EXPECT_EQ(io::complex_from_json(j), (Complex{0.25, -1.5}));
}

TEST(io_json, family_schema) {
    auto j = io::to_json(construct_mub(2));
    EXPECT_EQ(j.at("dim"), 2);
    ASSERT_EQ(j.at("bases").size(), 3u);
    EXPECT_EQ(j["bases"][1]["label"], 1);
    EXPECT_EQ(j["bases"][1]["states"].size(), 2u);
    EXPECT_TRUE(j["bases"][1]["states"][0][0].contains("re"));
}

TEST(io_json, families_round_trip_bit_exact) {
    for (int d : {2, 3, 4, 5, 7}) {
        auto f = construct_mub(d);
        auto text = io::to_json(f).dump();
        expect_same_family(f, io::family_from_json(io::Json::parse(text)));
    }
}

TEST(io_json, random_states_round_trip_bit_exact) {
    Rng rng(77);
    for (int n = 0; n < 200; ++n) {
        auto s = random_state(1 + rng.below(8), rng);
        auto back = io::state_from_json(io::Json::parse(io::to_json(s).dump()));
        ASSERT_EQ(back.dim(), s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) EXPECT_EQ(back[k], s[k]);
    }
}

TEST(io_json, corrupted_family_is_rejected) {
    auto j = io::to_json(construct_mub(3));
    j["bases"][2]["states"][1][0]["re"] = 5.0;
    EXPECT_ANY_THROW(io::family_from_json(j));
    auto k = io::to_json(construct_mub(3));
    k["bases"][0].erase("label");
    EXPECT_ANY_THROW(io::family_from_json(k));
}

TEST(io_json, breakdown_round_trip) {
    SuccessBreakdown b{4, 0.7, {{1, 0.625}, {0, 1.0}}, {2.5, 2.5, 2.5, 2.5}, 0.7000000000000001};
    auto back = io::breakdown_from_json(io::Json::parse(io::to_json(b).dump()));
    EXPECT_EQ(back.dim, b.dim);
    EXPECT_EQ(back.total, b.total);
    EXPECT_EQ(back.per_basis, b.per_basis);
    EXPECT_EQ(back.per_signal, b.per_signal);
    EXPECT_EQ(back.total_regrouped, b.total_regrouped);
}

TEST(io_json, bound_report_round_trip) {
    for (auto r : {bound_report(5), bound_report(5, 0), bound_report(5, 3)}) {
        auto back = io::bound_report_from_json(io::to_json(r));
        EXPECT_EQ(back.d, r.d);
        EXPECT_EQ(back.r, r.r);
        EXPECT_EQ(back.value, r.value);
        EXPECT_EQ(back.formula, r.formula);
    }
    auto bad = io::to_json(bound_report(3));
    bad["formula"] = "nonsense";
    EXPECT_THROW(io::bound_report_from_json(bad), std::invalid_argument);
}

TEST(io_json, game_result_round_trip) {
    GameResult r;
    r.successes = 7;
    r.trials = 10;
    r.estimate = 0.7;
    r.standard_error = std::sqrt(0.21 / 10);
    r.per_basis = {{0, {3, 3}}, {2, {7, 4}}};
    r.seed = 123456789012345ULL;
    auto j = io::to_json(r);
    EXPECT_TRUE(j.contains("stderr"));
    EXPECT_EQ(io::game_result_from_json(io::Json::parse(j.dump())), r);
}

TEST(io_manifest, round_trip_and_fields) {
    auto m = io::make_manifest("bound", {{"d", 5}}, 42);
    EXPECT_EQ(m.timestamp.size(), 20u);
    EXPECT_EQ(m.timestamp.back(), 'Z');
    EXPECT_EQ(m.tool_version, KINGS_VERSION);
    EXPECT_EQ(m.rng, "mt19937_64");
    auto back = io::manifest_from_json(io::Json::parse(io::to_json(m).dump()));
    EXPECT_EQ(back.command, "bound");
    EXPECT_EQ(back.parameters, m.parameters);
    EXPECT_EQ(back.seed, 42u);
    EXPECT_EQ(back.timestamp, m.timestamp);
    EXPECT_EQ(back.tolerances.comparison, kDefaultTolerances.comparison);
}

TEST(io_manifest, artifact_file_round_trip) {
    auto dir = scratch_dir("artifact");
    auto m = io::make_manifest("mub", {{"d", 3}}, 0);
    auto path = dir / "family.json";
    io::write_json_artifact(path, io::to_json(construct_mub(3)), m);
    io::RunManifest read_back;
    auto data = io::read_json_artifact(path, &read_back);
    expect_same_family(construct_mub(3), io::family_from_json(data));
    EXPECT_EQ(read_back.command, "mub");
    EXPECT_THROW(io::read_json_artifact(dir / "missing.json"), std::runtime_error);
}

TEST(io_csv, quoting_round_trip) {
    io::CsvTable t{{"name", "value"}, {{"plain", "1"}, {"a,b", "say \"hi\""}, {"", "line\nbreak"}}};
    std::stringstream ss;
    io::write_csv(ss, t);
    EXPECT_EQ(io::read_csv(ss), t);
}

TEST(io_csv, header_and_widths) {
    std::stringstream ok("x,y\r\n1,2\r\n");
    auto t = io::read_csv(ok);
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(t.rows.size(), 1u);
    std::stringstream ragged("x,y\n1\n");
    EXPECT_THROW(io::read_csv(ragged), std::runtime_error);
    std::stringstream empty("");
    EXPECT_THROW(io::read_csv(empty), std::runtime_error);
    std::stringstream open_quote("x\n\"abc\n");
    EXPECT_THROW(io::read_csv(open_quote), std::runtime_error);
    std::stringstream sink;
    EXPECT_THROW(io::write_csv(sink, {{"a"}, {{"1", "2"}}}), std::invalid_argument);
}

TEST(io_csv, file_round_trip) {
    auto dir = scratch_dir("csv");
    io::CsvTable t{io::complex_columns("z"), {{"0.5", "-0.5"}}};
    EXPECT_EQ(t.header, (std::vector<std::string>{"z_re", "z_im"}));
    io::write_csv_file(dir / "t.csv", t);
    EXPECT_EQ(io::read_csv_file(dir / "t.csv"), t);
}

TEST(io_format, number_formats) {
    EXPECT_EQ(io::format_fixed(0.63147, 4), "0.6315");
    EXPECT_EQ(io::format_fixed(-0.00001, 4), "0.0000");
    EXPECT_EQ(io::format_significant(0.0669872, 3), "0.0670");
    EXPECT_EQ(io::format_significant(0.933012, 3), "0.933");
    EXPECT_EQ(io::format_significant(0.0223291, 3), "0.0223");
    EXPECT_EQ(io::format_significant(0.0, 3), "0.00");
}

TEST(io_format, exact_format_round_trips) {
    Rng rng(5);
    for (int n = 0; n < 1000; ++n) {
        double x = rng.normal() * std::pow(10.0, static_cast<int>(rng.below(20)) - 10);
        EXPECT_EQ(std::stod(io::format_exact(x)), x);
    }
}
