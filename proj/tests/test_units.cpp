#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "support/helpers.hpp"
#include "wyrm/units.hpp"

using wyrm::units::checked_mul;
using wyrm::units::convert;
using wyrm::units::Quantity;
using wyrm::units::Unit;

TEST_CASE("conversion constants are exact") {
    CHECK(wyrm::units::kcal_to_joule == 4184.0);
    CHECK(wyrm::units::pound_to_kg == 0.45359237);
    CHECK(wyrm::units::hours_per_day == 24.0);
}

TEST_CASE("kcal to joule uses the exact 4184 factor") {
    const Quantity q(1.0, Unit::kcal);
    const Quantity j = convert(q, Unit::joule);
    CHECK(j.unit() == Unit::joule);
    CHECK(j.value() == 4184.0);
}

TEST_CASE("identity conversion returns the value unchanged") {
    const Quantity q(5.0, Unit::meter);
    const Quantity same = convert(q, Unit::meter);
    CHECK(same.value() == 5.0);
    CHECK(same.unit() == Unit::meter);
}

TEST_CASE("pounds to kilograms") {
    const Quantity lb(140.0, Unit::pound);
    const Quantity kg = convert(lb, Unit::kilogram);
    CHECK(kg.value() == doctest::Approx(63.503).epsilon(1e-4));
}

TEST_CASE("rate conversions: kcal/hr to kcal/day to J/day") {
    const Quantity hr(1.0, Unit::kcal_per_hour);
    CHECK(convert(hr, Unit::kcal_per_day).value() == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(convert(hr, Unit::joule_per_day).value() ==
          doctest::Approx(24.0 * 4184.0).epsilon(1e-12));
    const Quantity kd(1.0, Unit::kcal_per_day);
    CHECK(convert(kd, Unit::joule_per_day).value() == 4184.0);
}

TEST_CASE("incompatible conversions throw") {
    CHECK_THROWS_AS(convert(Quantity(1.0, Unit::meter), Unit::kilogram),
                    wyrm::IncompatibleUnits);
    CHECK_THROWS_AS(convert(Quantity(1.0, Unit::kcal), Unit::kcal_per_day),
                    wyrm::IncompatibleUnits);
    CHECK_THROWS_AS(convert(Quantity(1.0, Unit::acre), Unit::cubic_meter),
                    wyrm::IncompatibleUnits);
}

TEST_CASE("constructors reject non-finite values") {
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::quiet_NaN(), Unit::meter),
                    wyrm::ValidationError);
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::infinity(), Unit::joule),
                    wyrm::ValidationError);
}

TEST_CASE("checked_mul derives units inside the vocabulary") {
    const Quantity density(997.0, Unit::kg_per_m3);
    const Quantity volume(2.0, Unit::cubic_meter);
    const Quantity mass = checked_mul(density, volume);
    CHECK(mass.unit() == Unit::kilogram);
    CHECK(mass.value() == doctest::Approx(1994.0));

    const Quantity oven(3000.0, Unit::watt);
    const Quantity two_hours(7200.0, Unit::second);
    const Quantity joules = checked_mul(oven, two_hours);
    CHECK(joules.unit() == Unit::joule);
    CHECK(joules.value() == 2.16e7);

    const Quantity zero(0.0, Unit::kg_per_m3);
    CHECK(checked_mul(zero, Quantity(5.0, Unit::cubic_meter)).value() == 0.0);
}

TEST_CASE("checked_mul rejects products that leave the vocabulary") {
    CHECK_THROWS_AS(checked_mul(Quantity(1.0, Unit::meter), Quantity(1.0, Unit::meter)),
                    wyrm::UnitOverflow);
    CHECK_THROWS_AS(checked_mul(Quantity(1.0, Unit::joule), Quantity(1.0, Unit::acre)),
                    wyrm::UnitOverflow);
}

TEST_CASE("dimensionless multiplication keeps the other unit") {
    const Quantity scale(3.0, Unit::dimensionless);
    const Quantity len(2.0, Unit::meter);
    CHECK(checked_mul(scale, len).unit() == Unit::meter);
    CHECK(checked_mul(len, scale).value() == 6.0);
}

TEST_CASE("mismatched addition is rejected, matched addition works") {
    CHECK_THROWS_AS(Quantity(1.0, Unit::kcal) + Quantity(1.0, Unit::joule),
                    wyrm::IncompatibleUnits);
    CHECK_THROWS_AS(Quantity(1.0, Unit::meter) - Quantity(1.0, Unit::year),
                    wyrm::IncompatibleUnits);
    const Quantity sum = Quantity(1.5, Unit::joule) + Quantity(2.5, Unit::joule);
    CHECK(sum.value() == 4.0);
    const Quantity scaled = 3.0 * Quantity(2.0, Unit::acre);
    CHECK(scaled.value() == 6.0);
    CHECK(scaled.unit() == Unit::acre);
}

TEST_CASE("property: conversions round-trip within 1e-12") {
    testsupport::Rng rng(42);
    const std::pair<Unit, Unit> pairs[] = {
        {Unit::kcal, Unit::joule},
        {Unit::pound, Unit::kilogram},
        {Unit::kcal_per_hour, Unit::kcal_per_day},
        {Unit::kcal_per_hour, Unit::joule_per_day},
        {Unit::kcal_per_day, Unit::joule_per_day},
    };
    for (const auto& [u, w] : pairs) {
        for (int i = 0; i < 200; ++i) {
            const double v = rng.log_uniform(1e-6, 1e9);
            const Quantity back = convert(convert(Quantity(v, u), w), u);
            CHECK(testsupport::close_rel(back.value(), v, 1e-12));
        }
    }
}

TEST_CASE("property: convert is linear in the value") {
    testsupport::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const double v = rng.uniform(-1e6, 1e6);
        const double alpha = rng.uniform(-100.0, 100.0);
        const double lhs = convert(Quantity(alpha * v, Unit::kcal), Unit::joule).value();
        const double rhs = alpha * convert(Quantity(v, Unit::kcal), Unit::joule).value();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("kcal -> J -> kcal composes 4184 with its reciprocal") {
    for (double v : {1.0, 0.5, 54180.0, 4595391.0, 1e-9}) {
        const double rt =
            convert(convert(Quantity(v, Unit::kcal), Unit::joule), Unit::kcal).value();
        CHECK(testsupport::close_rel(rt, v, 1e-12));
    }
}
