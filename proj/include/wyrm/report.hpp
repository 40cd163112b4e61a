#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wyrm/dataset.hpp"
#include "wyrm/ecology.hpp"
#include "wyrm/energetics.hpp"
#include "wyrm/error.hpp"
#include "wyrm/feasibility.hpp"
#include "wyrm/growth.hpp"
#include "wyrm/mesh.hpp"
#include "wyrm/mode.hpp"

namespace wyrm::report {

enum class ModeChoice { paper_faithful, physical, both };
ModeChoice parse_mode_choice(std::string_view text);
std::vector<Mode> modes_of(ModeChoice choice);

enum class OutputFormat { json, csv, human };
OutputFormat parse_output_format(std::string_view text);

struct BackwardScenario {
    double mass_kg = 2e6;
    double n_sheep = 20.0;
    double e_other_joules = 0.0;
    double assimilation_k = 1.0;
};

struct PipelineConfig {
    std::string dataset = "builtin:table2";  // builtin:table1, builtin:table2 or a CSV path
    dataset::CollapsePolicy collapse = dataset::CollapsePolicy::midpoint;
    double rho = energetics::kDensityCap;
    double p_flight = 1.0 / 3.0;
    energetics::MassRoute route = energetics::MassRoute::dimension_law;
    double law_anchor_age = 6.0;    // dimension-law k calibrated here
    double cubic_anchor_age = 0.0;  // cubic route anchored here when no mesh is given
    std::optional<std::string> mesh_path;  // enables mesh-backed cubic/direct routes
    std::optional<std::pair<mesh::Vec3, mesh::Vec3>> snout;  // cubic reference points

    ecology::SheepParams sheep = ecology::SheepParams::defaults(Mode::paper_faithful);
    bool energy_density_overridden = false;  // else per-mode default applies
    feasibility::FireParams fire;

    ModeChoice mode = ModeChoice::both;
    BackwardScenario backward;
    OutputFormat output = OutputFormat::json;

    void validate() const;
    ecology::SheepParams sheep_for(Mode mode) const;
};

// Reads a JSON config file and overlays it onto defaults. Unknown keys are
// rejected so that typos fail loudly.
PipelineConfig load_config(const std::string& path);
void apply_config_json(PipelineConfig& config, const std::string& json_text);

struct ModeFootprint {
    Mode mode = Mode::paper_faithful;
    double sheep_real = 0.0;
    std::uint64_t sheep_ceil = 0;
    double land_acres = 0.0;
    double feed_kg_per_day = 0.0;
};

struct ForwardRow {
    double age = 0.0;
    double body_length_m = 0.0;
    double body_width_m = 0.0;
    double head_length_m = 0.0;
    double mass_kg = 0.0;  // configured route; drives the energy stages
    std::map<std::string, double> mass_by_route;  // all routes, side by side
    std::optional<double> mass_table_kg;       // reference mass, when tabulated
    std::optional<double> mass_discrepancy;    // configured route / reference
    double r_basal_kcal_hr = 0.0;
    double daily_kcal = 0.0;
    double daily_joule = 0.0;
    std::vector<ModeFootprint> footprints;
};

struct BackwardResult {
    Mode mode = Mode::paper_faithful;
    feasibility::EnergyLedger ledger;
    feasibility::FeasibilityVerdict verdict;
};

struct FullReport {
    std::optional<growth::FitResult> body_length_fit;
    std::optional<growth::FitResult> body_width_fit;
    std::optional<growth::FitResult> head_length_fit;
    std::vector<ForwardRow> forward;
    std::vector<BackwardResult> backward;
    std::vector<std::string> notes;   // documented anomalies of the reference data
    std::vector<std::string> errors;  // per-stage failure markers

    std::string to_json_string() const;
    std::string to_csv_string() const;
    std::string to_human_string() const;
    std::string render(OutputFormat format) const;
};

// Notes on the internal inconsistencies of the reference data; every full
// report carries them.
const std::vector<std::string>& known_inconsistencies();

dataset::ReferenceDataset load_dataset(const PipelineConfig& config);

// Fits the growth curves and walks every dataset age through mass, energy
// and footprint. Per-stage failures become error markers rather than an
// abandoned report.
FullReport run_forward(const PipelineConfig& config);

// Builds the configured scenario's energy ledger and verdict per mode.
FullReport run_backward(const PipelineConfig& config);

// Both pipelines in one report.
FullReport run_full(const PipelineConfig& config);

// Plot-ready CSV emission: growth_curve.csv, mass_vs_age.csv, kcal_vs_age.csv.
void emit_csv_files(const FullReport& report, const PipelineConfig& config,
                    const std::string& directory);

}  // namespace wyrm::report
