#include "wyrm/energetics.hpp"

#include <cmath>

#include <json.hpp>

#include "wyrm/units.hpp"

namespace wyrm::energetics {

double basal_rate_coefficient() {
    static const double coeff = 3.1 * std::pow(10.0, 0.074);
    return coeff;
}

void DensityModel::validate() const {
    if (!(rho > 0.0)) throw NonPositiveInput("density must be positive");
    if (rho > kDensityCap) throw DensityExceedsCap("density exceeds the water cap of 997 kg/m^3");
}

std::string_view route_name(MassRoute r) {
    switch (r) {
        case MassRoute::mesh_cubic: return "mesh_cubic";
        case MassRoute::dimension_law: return "dimension_law";
        case MassRoute::direct_mesh: return "direct_mesh";
    }
    return "?";
}

MassRoute parse_route(std::string_view text) {
    if (text == "cubic" || text == "mesh_cubic") return MassRoute::mesh_cubic;
    if (text == "law" || text == "dimension_law") return MassRoute::dimension_law;
    if (text == "direct" || text == "direct_mesh") return MassRoute::direct_mesh;
    throw ValidationError("unknown mass route: " + std::string(text));
}

MassEstimate mass_cubic(double model_volume, double model_ref_length,
                        double target_ref_length, double rho) {
    if (!(model_volume > 0.0 && model_ref_length > 0.0 && target_ref_length > 0.0))
        throw NonPositiveInput("cubic mass route requires positive inputs");
    DensityModel{rho}.validate();
    const double ratio = target_ref_length / model_ref_length;
    MassEstimate e;
    e.mass = rho * model_volume * ratio * ratio * ratio;
    e.route = MassRoute::mesh_cubic;
    e.calibration = {{"model_volume_m3", model_volume},
                     {"model_ref_length_m", model_ref_length},
                     {"target_ref_length_m", target_ref_length},
                     {"rho_kg_per_m3", rho}};
    return e;
}

MassEstimate mass_dimension_law(double body_length, double body_width, double rho, double k) {
    if (!(body_length > 0.0 && body_width > 0.0 && rho > 0.0 && k > 0.0))
        throw NonPositiveInput("dimension law requires positive inputs");
    MassEstimate e;
    e.mass = k * rho * body_length * body_width * body_width;
    e.route = MassRoute::dimension_law;
    e.calibration = {{"body_length_m", body_length},
                     {"body_width_m", body_width},
                     {"rho_kg_per_m3", rho},
                     {"k", k}};
    return e;
}

double dimension_law_k(double body_length, double body_width, double rho, double mass) {
    if (!(body_length > 0.0 && body_width > 0.0 && rho > 0.0 && mass > 0.0))
        throw NonPositiveInput("dimension law calibration requires positive inputs");
    return mass / (rho * body_length * body_width * body_width);
}

MassEstimate mass_direct(double mesh_volume_scaled, double rho) {
    if (!(mesh_volume_scaled > 0.0)) throw NonPositiveInput("mesh volume must be positive");
    DensityModel{rho}.validate();
    MassEstimate e;
    e.mass = rho * mesh_volume_scaled;
    e.route = MassRoute::direct_mesh;
    e.calibration = {{"mesh_volume_m3", mesh_volume_scaled}, {"rho_kg_per_m3", rho}};
    return e;
}

double basal_rate(double mass_kg) {
    if (!(mass_kg > 0.0)) throw NonPositiveMass("basal rate requires a positive mass");
    return basal_rate_coefficient() * std::pow(mass_kg, kBasalRateExponent);
}

EnergyBudget daily_consumption(double mass_kg, double p_flight) {
    if (!(mass_kg > 0.0)) throw NonPositiveMass("daily consumption requires a positive mass");
    if (!(p_flight >= 0.0 && p_flight <= 1.0))
        throw FlightFractionOutOfRange("flight fraction must lie in [0, 1]");

    EnergyBudget b;
    b.mass = mass_kg;
    b.r_basal = basal_rate(mass_kg);
    b.r_standard = kStandardRateFactor * b.r_basal;
    b.r_flight = kFlightRateFactor * b.r_basal;
    b.p_flight = p_flight;
    b.daily_kcal = units::hours_per_day *
                   (kFlightRateFactor * p_flight + kStandardRateFactor * (1.0 - p_flight)) *
                   b.r_basal;
    b.daily_joule = units::kcal_to_joule * b.daily_kcal;
    return b;
}

double flight_energy_joules(double mass_kg, double p_flight) {
    return daily_consumption(mass_kg, p_flight).daily_joule;
}

std::string MassEstimate::to_json_string() const {
    nlohmann::ordered_json j;
    j["mass"] = {{"value", mass}, {"unit", "kg"}};
    j["route"] = std::string(route_name(route));
    nlohmann::ordered_json cal;
    for (const auto& [key, value] : calibration) cal[key] = value;
    j["calibration"] = std::move(cal);
    return j.dump(2);
}

std::string EnergyBudget::to_json_string() const {
    nlohmann::ordered_json j;
    j["mass"] = {{"value", mass}, {"unit", "kg"}};
    j["r_basal"] = {{"value", r_basal}, {"unit", "kcal/hr"}};
    j["r_standard"] = {{"value", r_standard}, {"unit", "kcal/hr"}};
    j["r_flight"] = {{"value", r_flight}, {"unit", "kcal/hr"}};
    j["p_flight"] = {{"value", p_flight}, {"unit", ""}};
    j["daily_kcal"] = {{"value", daily_kcal}, {"unit", "kcal/day"}};
    j["daily_joule"] = {{"value", daily_joule}, {"unit", "J/day"}};
    return j.dump(2);
}

}  // namespace wyrm::energetics
