#pragma once

#include <cstdint>
#include <string>

#include "wyrm/error.hpp"
#include "wyrm/mode.hpp"

namespace wyrm::ecology {

// Husbandry constants for the prey model. Energy density is the one knob
// that differs between modes: the source analysis implies 2580 kcal/kg of
// edible meat in its forward budget, while its per-100-g figure works out
// to 2940 kcal/kg.
struct SheepParams {
    double live_mass_kg = 63.5;
    double edible_mass_kg = 21.0;
    double energy_density_kcal_per_kg = 2580.0;
    double ewes_per_100_acres = 280.0;
    double feed_ratio = 15.0;         // kg feed per kg meat
    double feed_efficiency = 0.044;   // energy conversion efficiency, documentation only
    double komodo_daily_fraction = 0.13;  // daily intake as a fraction of body mass

    static SheepParams defaults(Mode mode);
    void validate() const;

    // Energy of one lamb's edible yield, in kcal and joules.
    double lamb_energy_kcal() const;
    double lamb_energy_joules() const;
};

struct SheepPerDay {
    double real = 0.0;
    std::uint64_t ceil = 0;
};

// Daily prey count needed to meet an energy demand.
SheepPerDay sheep_per_day(double daily_kcal, const SheepParams& params);

// Body mass sustained by n prey per day under the Komodo 13%-of-body-mass
// daily intake rule: mass = (live_mass / fraction) * n.
double komodo_base_mass(double n_sheep_per_day, const SheepParams& params);

// Grazing land for a headcount: (n / ewes_per_100_acres) * 100 acres.
double land_required(double n_sheep, const SheepParams& params);

// Feed needed upstream of a mass of meat: feed_ratio * meat_mass.
double feed_chain(double meat_mass_kg, const SheepParams& params);

struct FootprintReport {
    SheepPerDay sheep_per_day;
    std::uint64_t flock_size = 0;     // headcount entering the land rule
    double land_acres = 0.0;
    double feed_mass_per_day_kg = 0.0;
    double feed_efficiency = 0.0;
    Mode mode = Mode::paper_faithful;

    std::string to_json_string() const;
};

FootprintReport footprint(double daily_kcal, const SheepParams& params, Mode mode);

}  // namespace wyrm::ecology
