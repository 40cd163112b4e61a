#pragma once

#include <cstdint>
#include <string>

#include "wyrm/ecology.hpp"
#include "wyrm/error.hpp"
#include "wyrm/mode.hpp"

namespace wyrm::feasibility {

// Energy booked per consumed lamb in paper-faithful mode. The source budget
// arrives at this figure through a calorie/kilocalorie conflation (it would
// correspond to a 75 kg lamb at 12,552 J/kg); physical mode recomputes the
// figure from edible mass and energy density instead.
inline constexpr double kPaperLambIntakeJoules = 941400.0;

// Fire breath is costed like cooking: a 3000 W heat source running for
// 120 minutes per prey animal.
struct FireParams {
    double power_watts = 3000.0;
    double duration_seconds = 7200.0;
    bool per_sheep = true;  // charge the cost once per sheep cooked

    void validate() const;
    double energy_per_use_joules() const { return power_watts * duration_seconds; }
};

// Daily fire-breathing cost for n prey.
double fire_energy(double n_sheep, const FireParams& params);

// Daily metabolizable intake from n prey for the given mode.
double intake_energy(double n_sheep, Mode mode, const ecology::SheepParams& sheep);

struct EnergyLedger {
    double e_flying = 0.0;       // J/day
    double e_fire = 0.0;         // J/day
    double e_other = 0.0;        // J/day
    double e_expenditure = 0.0;  // J/day, exactly e_flying + e_fire + e_other
    double e_intake = 0.0;       // J/day at the configured prey count
    double assimilation_k = 1.0; // required intake = k * expenditure
    Mode mode = Mode::paper_faithful;

    std::string to_json_string() const;
};

EnergyLedger build_ledger(double mass_kg, double p_flight, double n_sheep, double e_other,
                          double assimilation_k, Mode mode,
                          const ecology::SheepParams& sheep, const FireParams& fire);

struct FeasibilityVerdict {
    // Energy balance at the configured diet: e_intake >= k * e_expenditure.
    bool feasible = false;
    // Whether any diet can balance the ledger: with per-sheep fire cost,
    // each extra lamb must yield more energy than it costs to cook.
    bool feasible_by_energy = false;
    // k * e_expenditure / e_intake; infinity when nothing is eaten.
    double deficit_ratio = 0.0;
    std::uint64_t lambs_required = 0;
    double land_acres = 0.0;
    std::string narrative;

    std::string to_json_string() const;
};

FeasibilityVerdict assess(const EnergyLedger& ledger, const ecology::SheepParams& sheep,
                          const FireParams& fire);

}  // namespace wyrm::feasibility
