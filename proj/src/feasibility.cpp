#include "wyrm/feasibility.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "wyrm/energetics.hpp"

namespace wyrm::feasibility {

void FireParams::validate() const {
    if (!(power_watts > 0.0 && duration_seconds > 0.0))
        throw ValidationError("fire power and duration must be positive");
}

double fire_energy(double n_sheep, const FireParams& params) {
    if (!(n_sheep >= 0.0)) throw ValidationError("prey count must be nonnegative");
    params.validate();
    return params.energy_per_use_joules() * n_sheep;
}

double intake_energy(double n_sheep, Mode mode, const ecology::SheepParams& sheep) {
    if (!(n_sheep >= 0.0)) throw ValidationError("prey count must be nonnegative");
    if (mode == Mode::paper_faithful) return kPaperLambIntakeJoules * n_sheep;
    sheep.validate();
    return sheep.lamb_energy_joules() * n_sheep;
}

EnergyLedger build_ledger(double mass_kg, double p_flight, double n_sheep, double e_other,
                          double assimilation_k, Mode mode,
                          const ecology::SheepParams& sheep, const FireParams& fire) {
    if (!(assimilation_k >= 1.0)) throw ValidationError("assimilation factor must be >= 1");
    if (!(e_other >= 0.0)) throw ValidationError("other expenditure must be nonnegative");

    EnergyLedger l;
    l.e_flying = energetics::flight_energy_joules(mass_kg, p_flight);
    l.e_fire = fire_energy(n_sheep, fire);
    l.e_other = e_other;
    l.e_expenditure = l.e_flying + l.e_fire + l.e_other;
    l.e_intake = intake_energy(n_sheep, mode, sheep);
    l.assimilation_k = assimilation_k;
    l.mode = mode;
    return l;
}

FeasibilityVerdict assess(const EnergyLedger& ledger, const ecology::SheepParams& sheep,
                          const FireParams& fire) {
    const double per_lamb = ledger.mode == Mode::paper_faithful ? kPaperLambIntakeJoules
                                                                : sheep.lamb_energy_joules();
    const double required = ledger.assimilation_k * ledger.e_expenditure;

    FeasibilityVerdict v;
    v.lambs_required = static_cast<std::uint64_t>(std::ceil(required / per_lamb));
    v.land_acres = ecology::land_required(static_cast<double>(v.lambs_required), sheep);
    v.feasible = ledger.e_intake >= required;
    if (required == 0.0)
        v.deficit_ratio = 0.0;
    else if (ledger.e_intake > 0.0)
        v.deficit_ratio = required / ledger.e_intake;
    else
        v.deficit_ratio = std::numeric_limits<double>::infinity();

    // Marginal balance: eating one more lamb must pay for cooking it,
    // otherwise no diet size can ever close the ledger.
    const double marginal_cost =
        fire.per_sheep ? ledger.assimilation_k * fire.energy_per_use_joules() : 0.0;
    v.feasible_by_energy = required == 0.0 || per_lamb > marginal_cost;

    std::ostringstream note;
    if (required == 0.0) {
        note << "No expenditure to cover; trivially sustainable.";
    } else if (!v.feasible_by_energy) {
        note << "Each lamb yields " << per_lamb << " J but costs "
             << ledger.assimilation_k * fire.energy_per_use_joules()
             << " J of fire to cook, so no diet can balance the ledger; sustaining this "
                "creature would take an energy source beyond food (the dragon-crystal "
                "hypothesis), i.e. it cannot exist on this energy bookkeeping.";
    } else {
        note << "Ledger can be balanced by " << v.lambs_required
             << " lambs/day on about " << v.land_acres << " acres"
             << (v.feasible ? "; the configured diet already covers it."
                            : "; the configured diet falls short.");
    }
    v.narrative = note.str();
    return v;
}

std::string EnergyLedger::to_json_string() const {
    nlohmann::ordered_json j;
    j["e_flying"] = {{"value", e_flying}, {"unit", "J/day"}};
    j["e_fire"] = {{"value", e_fire}, {"unit", "J/day"}};
    j["e_other"] = {{"value", e_other}, {"unit", "J/day"}};
    j["e_expenditure"] = {{"value", e_expenditure}, {"unit", "J/day"}};
    j["e_intake"] = {{"value", e_intake}, {"unit", "J/day"}};
    j["assimilation_k"] = {{"value", assimilation_k}, {"unit", ""}};
    j["mode"] = std::string(to_string(mode));
    return j.dump(2);
}

std::string FeasibilityVerdict::to_json_string() const {
    nlohmann::ordered_json j;
    j["feasible"] = feasible;
    j["feasible_by_energy"] = feasible_by_energy;
    if (std::isfinite(deficit_ratio))
        j["deficit_ratio"] = {{"value", deficit_ratio}, {"unit", ""}};
    else
        j["deficit_ratio"] = {{"value", "inf"}, {"unit", ""}};
    j["lambs_required"] = {{"value", lambs_required}, {"unit", "sheep/day"}};
    j["land_acres"] = {{"value", land_acres}, {"unit", "acre"}};
    j["narrative"] = narrative;
    return j.dump(2);
}

}  // namespace wyrm::feasibility
