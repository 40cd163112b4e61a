#pragma once

#include <map>
#include <string>
#include <string_view>

#include "wyrm/error.hpp"

namespace wyrm::energetics {

// Density ceiling for a flying creature: the density of pure water.
inline constexpr double kDensityCap = 997.0;  // kg/m^3

// Basal metabolic rate coefficient 3.1 * 10^0.074 of the avian allometric
// law R_B = 3.1 * 10^0.074 * M^0.744 (kcal/hr for M in kg).
double basal_rate_coefficient();
inline constexpr double kBasalRateExponent = 0.744;

// Standard rate is 1.5x basal, sustained flight 12x basal.
inline constexpr double kStandardRateFactor = 1.5;
inline constexpr double kFlightRateFactor = 12.0;

struct DensityModel {
    double rho = kDensityCap;  // kg/m^3, capped at kDensityCap

    void validate() const;
};

enum class MassRoute { mesh_cubic, dimension_law, direct_mesh };
std::string_view route_name(MassRoute r);
MassRoute parse_route(std::string_view text);

struct MassEstimate {
    double mass = 0.0;  // kg
    MassRoute route = MassRoute::dimension_law;
    std::map<std::string, double> calibration;  // inputs that produced the estimate

    std::string to_json_string() const;
};

// Cubic similarity scaling from a reference model:
// mass = rho * model_volume * (target_ref_length / model_ref_length)^3.
MassEstimate mass_cubic(double model_volume, double model_ref_length,
                        double target_ref_length, double rho);

// Dimension law mass = k * rho * L * W^2. Height never enters: it is
// proportional to width by assumption and folded into k.
MassEstimate mass_dimension_law(double body_length, double body_width, double rho, double k);

// Calibration constant k solved from one (L, W, mass) anchor.
double dimension_law_k(double body_length, double body_width, double rho, double mass);

// mass = rho * volume for an already-scaled mesh volume.
MassEstimate mass_direct(double mesh_volume_scaled, double rho);

// Basal metabolic rate in kcal/hr.
double basal_rate(double mass_kg);

struct EnergyBudget {
    double mass = 0.0;        // kg
    double r_basal = 0.0;     // kcal/hr
    double r_standard = 0.0;  // kcal/hr, 1.5 * r_basal
    double r_flight = 0.0;    // kcal/hr, 12 * r_basal
    double p_flight = 0.0;    // fraction of the day spent flying, [0, 1]
    double daily_kcal = 0.0;  // kcal/day
    double daily_joule = 0.0; // J/day, 4184 * daily_kcal

    std::string to_json_string() const;
};

// Daily consumption C = 24 * (12 * p_flight + 1.5 * (1 - p_flight)) * R_B.
EnergyBudget daily_consumption(double mass_kg, double p_flight);

// Daily energy in joules: 4184 * daily_kcal.
double flight_energy_joules(double mass_kg, double p_flight);

}  // namespace wyrm::energetics
