#include "wyrm/units.hpp"

#include <array>
#include <cmath>
#include <string>

namespace wyrm::units {

namespace {

struct UnitName {
    Unit unit;
    std::string_view text;
};

constexpr std::array<UnitName, 16> kNames{{
    {Unit::meter, "m"},
    {Unit::kilogram, "kg"},
    {Unit::kcal, "kcal"},
    {Unit::joule, "J"},
    {Unit::kcal_per_hour, "kcal/hr"},
    {Unit::kcal_per_day, "kcal/day"},
    {Unit::joule_per_day, "J/day"},
    {Unit::acre, "acre"},
    {Unit::year, "yr"},
    {Unit::watt, "W"},
    {Unit::dimensionless, ""},
    {Unit::kg_per_m3, "kg/m^3"},
    {Unit::kcal_per_kg, "kcal/kg"},
    {Unit::cubic_meter, "m^3"},
    {Unit::second, "s"},
    {Unit::pound, "lb"},
}};

// Units that convert into one another share a component; the factor is the
// exact number of base units per unit. Singleton components have factor 1.
enum class Component { energy, mass, daily_rate, other };

struct Dimension {
    Component component;
    double to_base;  // 1 <unit> = to_base <base units of component>
};

Dimension dimension(Unit u) {
    switch (u) {
        case Unit::kcal: return {Component::energy, kcal_to_joule};
        case Unit::joule: return {Component::energy, 1.0};
        case Unit::pound: return {Component::mass, pound_to_kg};
        case Unit::kilogram: return {Component::mass, 1.0};
        case Unit::kcal_per_hour: return {Component::daily_rate, hours_per_day * kcal_to_joule};
        case Unit::kcal_per_day: return {Component::daily_rate, kcal_to_joule};
        case Unit::joule_per_day: return {Component::daily_rate, 1.0};
        default: return {Component::other, 1.0};
    }
}

}  // namespace

std::string_view name(Unit u) {
    for (const auto& n : kNames)
        if (n.unit == u) return n.text;
    return "?";
}

Unit parse_unit(std::string_view text) {
    for (const auto& n : kNames)
        if (n.text == text) return n.unit;
    // A couple of spellings accepted at CLI boundaries.
    if (text == "joule") return Unit::joule;
    if (text == "lbs") return Unit::pound;
    if (text == "meter") return Unit::meter;
    throw ValidationError("unknown unit: " + std::string(text));
}

Quantity::Quantity(double value, Unit unit) : value_(value), unit_(unit) {
    if (!std::isfinite(value))
        throw ValidationError("quantity value must be finite");
}

Quantity convert(const Quantity& q, Unit target) {
    if (q.unit() == target) return q;
    const Dimension src = dimension(q.unit());
    const Dimension dst = dimension(target);
    if (src.component == Component::other || src.component != dst.component)
        throw IncompatibleUnits("no conversion from " + std::string(name(q.unit())) +
                                " to " + std::string(name(target)));
    // Multiply then divide so that a round trip composes f and 1/f exactly.
    return Quantity((q.value() * src.to_base) / dst.to_base, target);
}

Quantity checked_mul(const Quantity& a, const Quantity& b) {
    const auto derived = [&]() -> Unit {
        const Unit ua = a.unit(), ub = b.unit();
        if (ua == Unit::dimensionless) return ub;
        if (ub == Unit::dimensionless) return ua;
        const auto pair_is = [&](Unit x, Unit y) {
            return (ua == x && ub == y) || (ua == y && ub == x);
        };
        if (pair_is(Unit::kg_per_m3, Unit::cubic_meter)) return Unit::kilogram;
        if (pair_is(Unit::watt, Unit::second)) return Unit::joule;
        if (pair_is(Unit::kcal_per_kg, Unit::kilogram)) return Unit::kcal;
        throw UnitOverflow("product " + std::string(name(ua)) + " * " +
                           std::string(name(ub)) + " leaves the unit vocabulary");
    }();
    return Quantity(a.value() * b.value(), derived);
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    if (a.unit() != b.unit())
        throw IncompatibleUnits("cannot add " + std::string(name(a.unit())) + " and " +
                                std::string(name(b.unit())));
    return Quantity(a.value() + b.value(), a.unit());
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    if (a.unit() != b.unit())
        throw IncompatibleUnits("cannot subtract " + std::string(name(b.unit())) +
                                " from " + std::string(name(a.unit())));
    return Quantity(a.value() - b.value(), a.unit());
}

Quantity operator*(double scalar, const Quantity& q) {
    return Quantity(scalar * q.value(), q.unit());
}

}  // namespace wyrm::units
