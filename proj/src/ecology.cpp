#include "wyrm/ecology.hpp"

#include <cmath>

#include <json.hpp>

#include "wyrm/units.hpp"

namespace wyrm::ecology {

SheepParams SheepParams::defaults(Mode mode) {
    SheepParams p;
    p.energy_density_kcal_per_kg = mode == Mode::paper_faithful ? 2580.0 : 2940.0;
    return p;
}

void SheepParams::validate() const {
    if (!(live_mass_kg > 0.0 && edible_mass_kg > 0.0 && energy_density_kcal_per_kg > 0.0 &&
          ewes_per_100_acres > 0.0 && feed_ratio > 0.0 && feed_efficiency > 0.0))
        throw ValidationError("sheep parameters must be positive");
    if (!(edible_mass_kg <= live_mass_kg))
        throw ValidationError("edible mass cannot exceed live mass");
    if (!(komodo_daily_fraction > 0.0 && komodo_daily_fraction < 1.0))
        throw ValidationError("daily intake fraction must lie in (0, 1)");
}

double SheepParams::lamb_energy_kcal() const {
    return edible_mass_kg * energy_density_kcal_per_kg;
}

double SheepParams::lamb_energy_joules() const {
    return units::kcal_to_joule * lamb_energy_kcal();
}

SheepPerDay sheep_per_day(double daily_kcal, const SheepParams& params) {
    if (!(daily_kcal > 0.0)) throw NonPositiveDemand("daily demand must be positive");
    params.validate();
    SheepPerDay out;
    out.real = daily_kcal / params.lamb_energy_kcal();
    out.ceil = static_cast<std::uint64_t>(std::ceil(out.real));
    return out;
}

double komodo_base_mass(double n_sheep_per_day, const SheepParams& params) {
    if (!(n_sheep_per_day >= 0.0)) throw ValidationError("prey count must be nonnegative");
    params.validate();
    return (params.live_mass_kg / params.komodo_daily_fraction) * n_sheep_per_day;
}

double land_required(double n_sheep, const SheepParams& params) {
    if (!(n_sheep >= 0.0)) throw ValidationError("headcount must be nonnegative");
    params.validate();
    return (n_sheep / params.ewes_per_100_acres) * 100.0;
}

double feed_chain(double meat_mass_kg, const SheepParams& params) {
    if (!(meat_mass_kg >= 0.0)) throw ValidationError("meat mass must be nonnegative");
    params.validate();
    return params.feed_ratio * meat_mass_kg;
}

FootprintReport footprint(double daily_kcal, const SheepParams& params, Mode mode) {
    FootprintReport r;
    r.sheep_per_day = sheep_per_day(daily_kcal, params);
    r.flock_size = r.sheep_per_day.ceil;
    r.land_acres = land_required(static_cast<double>(r.flock_size), params);
    r.feed_mass_per_day_kg =
        feed_chain(static_cast<double>(r.flock_size) * params.edible_mass_kg, params);
    r.feed_efficiency = params.feed_efficiency;
    r.mode = mode;
    return r;
}

std::string FootprintReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["sheep_per_day"] = {{"value", sheep_per_day.real}, {"unit", "sheep/day"}};
    j["sheep_per_day_ceil"] = {{"value", sheep_per_day.ceil}, {"unit", "sheep/day"}};
    j["flock_size"] = {{"value", flock_size}, {"unit", "sheep"}};
    j["land_acres"] = {{"value", land_acres}, {"unit", "acre"}};
    j["feed_mass_per_day"] = {{"value", feed_mass_per_day_kg}, {"unit", "kg/day"}};
    j["feed_efficiency"] = {{"value", feed_efficiency}, {"unit", ""}};
    j["mode"] = std::string(to_string(mode));
    return j.dump(2);
}

}  // namespace wyrm::ecology
