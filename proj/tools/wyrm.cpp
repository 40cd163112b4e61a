// Command-line front end: growth fitting, mesh volumes, mass and energy
// estimates, ecological footprints and the full forward/backward report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wyrm/dataset.hpp"
#include "wyrm/ecology.hpp"
#include "wyrm/energetics.hpp"
#include "wyrm/error.hpp"
#include "wyrm/feasibility.hpp"
#include "wyrm/fixtures.hpp"
#include "wyrm/growth.hpp"
#include "wyrm/mesh.hpp"
#include "wyrm/report.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitNonConvergence = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wyrm::IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

wyrm::mesh::TriangleMesh load_mesh(const std::string& path) {
    if (path == "builtin:dragonoid") return wyrm::mesh::fixtures::dragonoid();
    if (path == "builtin:cube") return wyrm::mesh::fixtures::unit_cube();
    const std::string bytes = read_file(path);
    if (path.size() > 4 && path.substr(path.size() - 4) == ".obj")
        return wyrm::mesh::parse_obj(bytes);
    return wyrm::mesh::parse_stl(bytes);
}

std::pair<wyrm::mesh::Vec3, wyrm::mesh::Vec3> parse_snout(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw wyrm::ValidationError("--snout expects 'x1,y1,z1:x2,y2,z2'");
    const auto parse_point = [](const std::string& part) {
        wyrm::mesh::Vec3 p;
        if (std::sscanf(part.c_str(), "%lf,%lf,%lf", &p.x, &p.y, &p.z) != 3)
            throw wyrm::ValidationError("malformed point '" + part + "'");
        return p;
    };
    return {parse_point(text.substr(0, colon)), parse_point(text.substr(colon + 1))};
}

ordered_json quantity(double value, std::string_view unit) {
    return ordered_json{{"value", value}, {"unit", std::string(unit)}};
}

wyrm::dataset::Column parse_column(const std::string& text) {
    for (wyrm::dataset::Column c : wyrm::dataset::kColumns)
        if (wyrm::dataset::column_name(c) == text) return c;
    throw wyrm::ValidationError("unknown column: " + text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"creature energetics modeling toolkit"};
    app.require_subcommand(1);

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "fit the logistic growth law to a dataset column");
    std::string fit_dataset = "builtin:table2";
    std::string fit_column = "body_length";
    std::string fit_collapse = "midpoint";
    std::string fit_config;
    fit_cmd->add_option("--dataset", fit_dataset, "builtin:table1, builtin:table2 or a CSV path");
    fit_cmd->add_option("--column", fit_column, "dataset column to fit");
    fit_cmd->add_option("--collapse", fit_collapse, "midpoint|lo|hi range collapse policy");
    fit_cmd->add_option("--config", fit_config, "JSON config file (flags win)");

    // ---- predict ----
    auto* predict_cmd = app.add_subcommand("predict", "evaluate a growth curve at given ages");
    std::string pr_dataset = "builtin:table2";
    std::string pr_column = "body_length";
    std::string pr_collapse = "midpoint";
    std::vector<double> pr_times;
    double pr_A = 0.0, pr_a = 0.0, pr_b = 0.0;
    predict_cmd->add_option("--dataset", pr_dataset, "dataset to fit when no model is given");
    predict_cmd->add_option("--column", pr_column, "dataset column to fit");
    predict_cmd->add_option("--collapse", pr_collapse, "range collapse policy");
    predict_cmd->add_option("--t", pr_times, "ages (years) to evaluate")->required();
    auto* opt_A = predict_cmd->add_option("--A", pr_A, "asymptote (skip fitting)");
    auto* opt_a = predict_cmd->add_option("--a", pr_a, "offset (skip fitting)");
    auto* opt_b = predict_cmd->add_option("--b", pr_b, "rate (skip fitting)");

    // ---- volume ----
    auto* volume_cmd = app.add_subcommand("volume", "mesh volume and extents (OBJ or STL)");
    std::string vol_file;
    std::string vol_axis;
    std::string vol_snout;
    volume_cmd->add_option("file", vol_file, "mesh file, or builtin:dragonoid / builtin:cube")
        ->required();
    volume_cmd->add_option("--axis", vol_axis, "x|y|z|principal characteristic length");
    volume_cmd->add_option("--snout", vol_snout, "snout points 'x1,y1,z1:x2,y2,z2'");

    // ---- mass ----
    auto* mass_cmd = app.add_subcommand("mass", "mass estimate via cubic, law or direct route");
    std::string mass_route = "law";
    double m_rho = wyrm::energetics::kDensityCap;
    double m_length = 0.0, m_width = 0.0, m_k = 0.0;
    double m_model_volume = 0.0, m_model_ref = 0.0, m_target_ref = 0.0;
    double m_volume = 0.0;
    std::string m_mesh;
    std::string m_snout;
    double m_scale_to_length = 0.0;
    mass_cmd->add_option("--route", mass_route, "cubic|law|direct");
    mass_cmd->add_option("--rho", m_rho, "density kg/m^3 (capped at 997)");
    mass_cmd->add_option("--length", m_length, "body length m (law)");
    mass_cmd->add_option("--width", m_width, "body width m (law)");
    mass_cmd->add_option("--k", m_k, "calibration constant (law)");
    mass_cmd->add_option("--model-volume", m_model_volume, "reference model volume m^3 (cubic)");
    mass_cmd->add_option("--model-ref-length", m_model_ref, "reference length on the model m (cubic)");
    mass_cmd->add_option("--target-ref-length", m_target_ref, "target reference length m (cubic)");
    mass_cmd->add_option("--volume", m_volume, "scaled volume m^3 (direct)");
    mass_cmd->add_option("--mesh", m_mesh, "mesh file for cubic/direct routes");
    mass_cmd->add_option("--snout", m_snout, "model snout points (cubic with --mesh)");
    mass_cmd->add_option("--scale-to-length", m_scale_to_length,
                         "scale mesh to this body length before direct mass");

    // ---- energy ----
    auto* energy_cmd = app.add_subcommand("energy", "metabolic energy budget for a mass");
    double e_mass = 0.0, e_pf = 1.0 / 3.0;
    std::string e_units = "kcal";
    energy_cmd->add_option("--mass", e_mass, "mass kg")->required();
    energy_cmd->add_option("--pf", e_pf, "fraction of the day spent flying [0,1]");
    energy_cmd->add_option("--units", e_units, "kcal|joule daily total to highlight");

    // ---- ecology ----
    auto* ecology_cmd = app.add_subcommand("ecology", "prey and land footprint for a demand");
    double ec_daily_kcal = 0.0;
    std::string ec_mode = "paper";
    ecology_cmd->add_option("--daily-kcal", ec_daily_kcal, "daily demand kcal/day")->required();
    ecology_cmd->add_option("--mode", ec_mode, "paper|physical");

    // ---- feasibility ----
    auto* feas_cmd = app.add_subcommand("feasibility", "backward energy ledger and verdict");
    double f_mass = 2e6, f_pf = 1.0 / 3.0, f_sheep = 20.0, f_k = 1.0, f_eother = 0.0;
    std::string f_mode = "paper";
    std::string f_config;
    feas_cmd->add_option("--mass", f_mass, "mass kg");
    feas_cmd->add_option("--pf", f_pf, "fraction of the day spent flying [0,1]");
    feas_cmd->add_option("--sheep", f_sheep, "prey eaten per day");
    feas_cmd->add_option("--k", f_k, "assimilation factor >= 1");
    feas_cmd->add_option("--e-other", f_eother, "other expenditure J/day");
    feas_cmd->add_option("--mode", f_mode, "paper|physical|both");
    feas_cmd->add_option("--config", f_config, "JSON config file (flags win)");

    // ---- report ----
    auto* report_cmd = app.add_subcommand("report", "full forward + backward report");
    std::string r_config;
    std::string r_dataset, r_mode, r_route, r_output, r_collapse, r_emit_csv;
    double r_pf = 0.0, r_rho = 0.0;
    report_cmd->add_option("--config", r_config, "JSON config file (flags win)");
    report_cmd->add_option("--dataset", r_dataset, "builtin:table1, builtin:table2 or CSV path");
    report_cmd->add_option("--mode", r_mode, "paper|physical|both");
    report_cmd->add_option("--route", r_route, "cubic|law|direct mass route");
    report_cmd->add_option("--output", r_output, "json|csv|human");
    report_cmd->add_option("--collapse", r_collapse, "midpoint|lo|hi");
    auto* opt_rpf = report_cmd->add_option("--pf", r_pf, "flight fraction [0,1]");
    auto* opt_rrho = report_cmd->add_option("--rho", r_rho, "density kg/m^3");
    report_cmd->add_option("--emit-csv", r_emit_csv, "directory for plot-ready CSV files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fit_cmd) {
            wyrm::report::PipelineConfig config;
            if (!fit_config.empty()) config = wyrm::report::load_config(fit_config);
            if (fit_cmd->count("--dataset")) config.dataset = fit_dataset;
            if (fit_cmd->count("--collapse"))
                config.collapse = wyrm::dataset::parse_policy(fit_collapse);
            const auto ds = wyrm::report::load_dataset(config);
            const auto series =
                wyrm::dataset::points(ds, parse_column(fit_column), config.collapse);
            const auto result = wyrm::growth::fit(series);
            std::cout << result.to_json_string() << '\n';
            return result.converged ? kExitOk : kExitNonConvergence;
        }

        if (*predict_cmd) {
            wyrm::growth::GrowthModel model;
            bool converged = true;
            if (*opt_A || *opt_a || *opt_b) {
                if (!(*opt_A && *opt_a && *opt_b))
                    throw wyrm::ValidationError("--A, --a and --b must be given together");
                model = {pr_A, pr_a, pr_b};
                model.validate();
            } else {
                wyrm::report::PipelineConfig config;
                config.dataset = pr_dataset;
                config.collapse = wyrm::dataset::parse_policy(pr_collapse);
                const auto ds = wyrm::report::load_dataset(config);
                const auto result = wyrm::growth::fit(
                    wyrm::dataset::points(ds, parse_column(pr_column), config.collapse));
                model = result.model;
                converged = result.converged;
            }
            ordered_json out = ordered_json::array();
            for (double t : pr_times) {
                if (t < 0.0) throw wyrm::ValidationError("ages must be nonnegative");
                out.push_back({{"t", quantity(t, "yr")},
                               {"value", quantity(wyrm::growth::eval(model, t), "m")}});
            }
            std::cout << out.dump(2) << '\n';
            return converged ? kExitOk : kExitNonConvergence;
        }

        if (*volume_cmd) {
            const auto mesh = load_mesh(vol_file);
            const auto summary = wyrm::mesh::summarize(mesh);
            ordered_json j = ordered_json::parse(wyrm::mesh::to_json_string(summary));
            if (!vol_axis.empty())
                j["characteristic_length"] = quantity(
                    wyrm::mesh::characteristic_length(mesh, wyrm::mesh::parse_axis(vol_axis)),
                    "m");
            if (!vol_snout.empty()) {
                const auto [tip, base] = parse_snout(vol_snout);
                j["snout_length"] =
                    quantity(wyrm::mesh::characteristic_length(mesh, tip, base), "m");
            }
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*mass_cmd) {
            const auto route = wyrm::energetics::parse_route(mass_route);
            wyrm::energetics::MassEstimate est;
            switch (route) {
                case wyrm::energetics::MassRoute::dimension_law:
                    if (m_k <= 0.0)
                        throw wyrm::ValidationError("law route needs --k (calibration constant)");
                    est = wyrm::energetics::mass_dimension_law(m_length, m_width, m_rho, m_k);
                    break;
                case wyrm::energetics::MassRoute::mesh_cubic: {
                    double model_volume = m_model_volume;
                    double model_ref = m_model_ref;
                    if (!m_mesh.empty()) {
                        const auto mesh = load_mesh(m_mesh);
                        model_volume = wyrm::mesh::signed_volume(mesh);
                        if (!m_snout.empty()) {
                            const auto [tip, base] = parse_snout(m_snout);
                            model_ref = wyrm::mesh::characteristic_length(mesh, tip, base);
                        } else {
                            model_ref = wyrm::mesh::characteristic_length(
                                mesh, wyrm::mesh::Axis::principal);
                        }
                    }
                    est = wyrm::energetics::mass_cubic(model_volume, model_ref, m_target_ref,
                                                       m_rho);
                    break;
                }
                case wyrm::energetics::MassRoute::direct_mesh: {
                    double volume = m_volume;
                    if (!m_mesh.empty()) {
                        auto mesh = load_mesh(m_mesh);
                        if (m_scale_to_length > 0.0) {
                            const double current = wyrm::mesh::characteristic_length(
                                mesh, wyrm::mesh::Axis::principal);
                            mesh = wyrm::mesh::scale_uniform(mesh, m_scale_to_length / current);
                        }
                        volume = wyrm::mesh::signed_volume(mesh);
                    }
                    est = wyrm::energetics::mass_direct(volume, m_rho);
                    break;
                }
            }
            std::cout << est.to_json_string() << '\n';
            return kExitOk;
        }

        if (*energy_cmd) {
            const auto budget = wyrm::energetics::daily_consumption(e_mass, e_pf);
            ordered_json j = ordered_json::parse(budget.to_json_string());
            if (e_units == "joule")
                j["daily"] = quantity(budget.daily_joule, "J/day");
            else if (e_units == "kcal")
                j["daily"] = quantity(budget.daily_kcal, "kcal/day");
            else
                throw wyrm::ValidationError("--units must be kcal or joule");
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*ecology_cmd) {
            const auto mode = wyrm::parse_mode(ec_mode == "paper" ? "paper_faithful" : ec_mode);
            const auto params = wyrm::ecology::SheepParams::defaults(mode);
            const auto fp = wyrm::ecology::footprint(ec_daily_kcal, params, mode);
            std::cout << fp.to_json_string() << '\n';
            return kExitOk;
        }

        if (*feas_cmd) {
            wyrm::report::PipelineConfig config;
            if (!f_config.empty()) config = wyrm::report::load_config(f_config);
            if (feas_cmd->count("--mass")) config.backward.mass_kg = f_mass;
            if (feas_cmd->count("--pf")) config.p_flight = f_pf;
            if (feas_cmd->count("--sheep")) config.backward.n_sheep = f_sheep;
            if (feas_cmd->count("--k")) config.backward.assimilation_k = f_k;
            if (feas_cmd->count("--e-other")) config.backward.e_other_joules = f_eother;
            config.mode = wyrm::report::parse_mode_choice(f_mode);

            const auto rep = wyrm::report::run_backward(config);
            if (!rep.errors.empty()) {
                for (const auto& e : rep.errors) std::cerr << e << '\n';
                return kExitValidation;
            }
            ordered_json out = ordered_json::array();
            for (const auto& res : rep.backward) {
                out.push_back(
                    {{"mode", std::string(wyrm::to_string(res.mode))},
                     {"ledger", ordered_json::parse(res.ledger.to_json_string())},
                     {"verdict", ordered_json::parse(res.verdict.to_json_string())}});
            }
            std::cout << (out.size() == 1 ? out.front().dump(2) : out.dump(2)) << '\n';
            return kExitOk;
        }

        if (*report_cmd) {
            wyrm::report::PipelineConfig config;
            if (!r_config.empty()) config = wyrm::report::load_config(r_config);
            if (report_cmd->count("--dataset")) config.dataset = r_dataset;
            if (report_cmd->count("--mode"))
                config.mode = wyrm::report::parse_mode_choice(r_mode);
            if (report_cmd->count("--route"))
                config.route = wyrm::energetics::parse_route(r_route);
            if (report_cmd->count("--output"))
                config.output = wyrm::report::parse_output_format(r_output);
            if (report_cmd->count("--collapse"))
                config.collapse = wyrm::dataset::parse_policy(r_collapse);
            if (*opt_rpf) config.p_flight = r_pf;
            if (*opt_rrho) config.rho = r_rho;

            const auto rep = wyrm::report::run_full(config);
            if (!r_emit_csv.empty()) wyrm::report::emit_csv_files(rep, config, r_emit_csv);
            std::cout << rep.render(config.output) << '\n';
            const bool fit_failed =
                (rep.body_length_fit && !rep.body_length_fit->converged) ||
                (rep.body_width_fit && !rep.body_width_fit->converged);
            if (fit_failed) return kExitNonConvergence;
            if (!rep.errors.empty()) return kExitValidation;
            return kExitOk;
        }
    } catch (const wyrm::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const wyrm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitIo;
    } catch (const wyrm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}
