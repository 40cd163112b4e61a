#pragma once

#include <string_view>

#include "wyrm/error.hpp"

namespace wyrm::units {

// Closed unit vocabulary. This is deliberately not a general-purpose units
// library: only the units that actually appear in the pipeline exist, and
// only a handful of products between them are meaningful.
enum class Unit {
    meter,
    kilogram,
    kcal,
    joule,
    kcal_per_hour,
    kcal_per_day,
    joule_per_day,
    acre,
    year,
    watt,
    dimensionless,
    kg_per_m3,
    kcal_per_kg,
    cubic_meter,
    second,
    pound,
};

std::string_view name(Unit u);
Unit parse_unit(std::string_view text);

// Exact conversion constants.
inline constexpr double kcal_to_joule = 4184.0;
inline constexpr double pound_to_kg = 0.45359237;
inline constexpr double hours_per_day = 24.0;

// A finite scalar tagged with a unit. Arithmetic between mismatched units
// throws; conversions must be requested explicitly.
class Quantity {
public:
    Quantity(double value, Unit unit);

    double value() const { return value_; }
    Unit unit() const { return unit_; }

private:
    double value_;
    Unit unit_;
};

// Converts between units of the same dimension using exact factors.
// Throws IncompatibleUnits when no conversion path exists.
Quantity convert(const Quantity& q, Unit target);

// Multiplies two quantities. The unit product must stay inside the closed
// vocabulary; otherwise UnitOverflow is thrown.
Quantity checked_mul(const Quantity& a, const Quantity& b);

// Same-unit addition/subtraction and scalar multiplication.
Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(double scalar, const Quantity& q);

}  // namespace wyrm::units
