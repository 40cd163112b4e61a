#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wyrm/report.hpp"

using namespace wyrm::report;
using wyrm::Mode;

namespace {

const ForwardRow& row_at(const FullReport& rep, double age) {
    for (const auto& row : rep.forward)
        if (row.age == age) return row;
    throw std::runtime_error("no row at that age");
}

const ModeFootprint& footprint_of(const ForwardRow& row, Mode mode) {
    for (const auto& fp : row.footprints)
        if (fp.mode == mode) return fp;
    throw std::runtime_error("no footprint for that mode");
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path.string();
}

}  // namespace

TEST_CASE("forward pipeline reproduces the adult footprint") {
    PipelineConfig config;  // defaults: table2, law route anchored at age 6, pf = 1/3
    const auto rep = run_forward(config);
    CHECK(rep.errors.empty());
    REQUIRE(rep.body_length_fit.has_value());
    REQUIRE(rep.body_width_fit.has_value());
    CHECK(rep.body_length_fit->converged);
    CHECK(rep.forward.size() == 8);

    const auto& adult = row_at(rep, 6.0);
    // The law route is calibrated at this age, so the anchor mass is exact.
    CHECK(adult.mass_kg == doctest::Approx(251328.27).epsilon(1e-9));
    CHECK(adult.daily_kcal == doctest::Approx(4595391.0).epsilon(5e-3));
    const auto& paper_fp = footprint_of(adult, Mode::paper_faithful);
    CHECK(paper_fp.sheep_ceil == 85);

    // Reference masses ride along with discrepancy ratios.
    REQUIRE(adult.mass_table_kg.has_value());
    CHECK(*adult.mass_table_kg == 251328.27);
    CHECK(*adult.mass_discrepancy == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(row_at(rep, 4.0).mass_discrepancy.has_value());
}

TEST_CASE("forward pipeline at full-time flight hits the worst-case figure") {
    PipelineConfig config;
    config.p_flight = 1.0;
    config.mode = ModeChoice::paper_faithful;
    const auto rep = run_forward(config);
    const auto& adult = row_at(rep, 6.0);
    CHECK(adult.daily_kcal == doctest::Approx(11028939.0).epsilon(5e-3));
}

TEST_CASE("all three mass routes produce populated reports") {
    for (auto route : {wyrm::energetics::MassRoute::dimension_law,
                       wyrm::energetics::MassRoute::mesh_cubic,
                       wyrm::energetics::MassRoute::direct_mesh}) {
        PipelineConfig config;
        config.route = route;
        const auto rep = run_forward(config);
        CHECK(rep.errors.empty());
        CHECK(rep.forward.size() == 8);
        CHECK(rep.head_length_fit.has_value());
        for (const auto& row : rep.forward) {
            CHECK(row.mass_kg > 0.0);
            // Every row carries all three routes side by side.
            CHECK(row.mass_by_route.size() == 3);
            CHECK(row.mass_by_route.at(std::string(wyrm::energetics::route_name(route))) ==
                  doctest::Approx(row.mass_kg).epsilon(1e-12));
        }
    }
}

TEST_CASE("backward pipeline flips between modes on the 2000-ton scenario") {
    PipelineConfig config;  // defaults: mass 2e6, 20 sheep, k = 1, mode both
    const auto rep = run_backward(config);
    CHECK(rep.errors.empty());
    REQUIRE(rep.backward.size() == 2);

    const auto& paper = rep.backward[0];
    const auto& physical = rep.backward[1];
    CHECK(paper.mode == Mode::paper_faithful);
    CHECK(physical.mode == Mode::physical);

    CHECK(paper.ledger.e_flying == doctest::Approx(8.99e10).epsilon(0.01));
    CHECK(paper.ledger.e_fire == 4.32e8);
    CHECK_FALSE(paper.verdict.feasible_by_energy);
    CHECK(physical.verdict.feasible_by_energy);
    CHECK(physical.verdict.lambs_required == 350);
    CHECK(physical.verdict.land_acres == doctest::Approx(125.0).epsilon(0.01));
}

TEST_CASE("config validation rejects out-of-range flight fractions") {
    PipelineConfig config;
    config.p_flight = 1.5;
    CHECK_THROWS_AS(run_backward(config), wyrm::FlightFractionOutOfRange);
    config.p_flight = -0.1;
    CHECK_THROWS_AS(run_forward(config), wyrm::FlightFractionOutOfRange);
}

TEST_CASE("missing dataset propagates as an I/O error, no report") {
    PipelineConfig config;
    config.dataset = "/nonexistent/nowhere.csv";
    CHECK_THROWS_AS(run_forward(config), wyrm::IoError);
}

TEST_CASE("a dataset too small to fit degrades to an error marker") {
    const auto path = write_temp("tiny_dataset.csv",
                                 "age,head_height,head_length,body_width,body_length\n"
                                 "0,0.1,0.1,0.1,0.4\n"
                                 "1,0.2,0.2,0.2,0.9\n");
    PipelineConfig config;
    config.dataset = path;
    const auto rep = run_forward(config);
    CHECK_FALSE(rep.errors.empty());
    CHECK(rep.forward.empty());
    std::remove(path.c_str());
}

TEST_CASE("reports are byte-identical across runs") {
    PipelineConfig config;
    const auto a = run_full(config);
    const auto b = run_full(config);
    CHECK(a.to_json_string() == b.to_json_string());
    CHECK(a.to_csv_string() == b.to_csv_string());
}

TEST_CASE("json report carries unit labels on numeric fields") {
    PipelineConfig config;
    config.mode = ModeChoice::paper_faithful;
    const auto json = run_full(config).to_json_string();
    CHECK(json.find("\"unit\": \"kg\"") != std::string::npos);
    CHECK(json.find("\"unit\": \"kcal/day\"") != std::string::npos);
    CHECK(json.find("\"unit\": \"J/day\"") != std::string::npos);
    CHECK(json.find("\"unit\": \"acre\"") != std::string::npos);
    CHECK(json.find("\"notes\"") != std::string::npos);
}

TEST_CASE("csv and human renderings contain the forward table") {
    PipelineConfig config;
    const auto rep = run_full(config);
    const auto csv = rep.to_csv_string();
    CHECK(csv.find("age_yr,body_length_m") == 0);
    CHECK(csv.find("\n0,") != std::string::npos);
    const auto human = rep.to_human_string();
    CHECK(human.find("body length") != std::string::npos);
    CHECK(human.find("lambs required") != std::string::npos);
}

TEST_CASE("config files overlay defaults and flags win downstream") {
    const auto path = write_temp("config_test.json", R"({
        "dataset": "builtin:table1",
        "collapse": "hi",
        "p_flight": 1.0,
        "mode": "paper",
        "backward": {"mass_kg": 490.0, "n_sheep": 1},
        "sheep": {"energy_density_kcal_per_kg": 3000.0}
    })");
    const auto config = load_config(path);
    CHECK(config.dataset == "builtin:table1");
    CHECK(config.collapse == wyrm::dataset::CollapsePolicy::hi);
    CHECK(config.p_flight == 1.0);
    CHECK(config.mode == ModeChoice::paper_faithful);
    CHECK(config.backward.mass_kg == 490.0);
    CHECK(config.backward.n_sheep == 1.0);
    CHECK(config.energy_density_overridden);
    CHECK(config.sheep_for(Mode::physical).energy_density_kcal_per_kg == 3000.0);
    std::remove(path.c_str());
}

TEST_CASE("unknown config keys fail loudly") {
    PipelineConfig config;
    CHECK_THROWS_AS(apply_config_json(config, R"({"densty": 900})"), wyrm::ValidationError);
    CHECK_THROWS_AS(apply_config_json(config, R"({"sheep": {"liv_mass": 1}})"),
                    wyrm::ValidationError);
    CHECK_THROWS_AS(apply_config_json(config, "not json"), wyrm::ValidationError);
}

TEST_CASE("per-mode energy density defaults apply unless overridden") {
    PipelineConfig config;
    CHECK(config.sheep_for(Mode::paper_faithful).energy_density_kcal_per_kg == 2580.0);
    CHECK(config.sheep_for(Mode::physical).energy_density_kcal_per_kg == 2940.0);
}

TEST_CASE("emit_csv_files writes the three plot files") {
    PipelineConfig config;
    const auto rep = run_full(config);
    const auto dir = std::filesystem::temp_directory_path() / "wyrm_csv_test";
    emit_csv_files(rep, config, dir.string());
    for (const char* name : {"growth_curve.csv", "mass_vs_age.csv", "kcal_vs_age.csv"}) {
        const auto file = dir / name;
        CHECK(std::filesystem::exists(file));
        std::ifstream in(file);
        std::string header;
        std::getline(in, header);
        CHECK(header.find("age_yr") == 0);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("raw table1 with lo/hi collapse policies still runs end to end") {
    for (auto policy : {wyrm::dataset::CollapsePolicy::lo, wyrm::dataset::CollapsePolicy::hi,
                        wyrm::dataset::CollapsePolicy::midpoint}) {
        PipelineConfig config;
        config.dataset = "builtin:table1";
        config.collapse = policy;
        const auto rep = run_forward(config);
        CHECK(rep.errors.empty());
        CHECK(rep.forward.size() == 8);
    }
}
