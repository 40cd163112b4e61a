#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wyrm/error.hpp"

namespace wyrm::dataset {

// [lo, hi] interval; a point value has lo == hi.
struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;

    ValueRange() = default;
    ValueRange(double point) : lo(point), hi(point) {}  // NOLINT(google-explicit-constructor)
    ValueRange(double lo_arg, double hi_arg) : lo(lo_arg), hi(hi_arg) {}

    bool is_point() const { return lo == hi; }
    double midpoint() const { return (lo + hi) / 2.0; }
};

enum class Column {
    head_height,
    head_length,
    body_width,
    body_length,
};

inline constexpr Column kColumns[] = {Column::head_height, Column::head_length,
                                      Column::body_width, Column::body_length};

std::string_view column_name(Column c);

// One observation row: age plus four measured body dimensions in meters.
struct MeasurementRecord {
    double age = 0.0;  // years
    ValueRange head_height;
    ValueRange head_length;
    ValueRange body_width;
    ValueRange body_length;

    const ValueRange& at(Column c) const;
    ValueRange& at(Column c);
};

struct ReferenceDataset {
    std::string name;
    std::vector<MeasurementRecord> records;  // sorted by strictly increasing age
    std::string provenance;
};

// Checks all record/dataset invariants, throwing ValidationError on violation.
void validate(const ReferenceDataset& ds);

struct MassEntry {
    double age = 0.0;   // years; the last entry stands for "this age and older"
    double mass = 0.0;  // kg
};

struct MassTable {
    std::vector<MassEntry> entries;

    // Mass for an age, with the last entry extending to all older ages.
    // Ages between entries resolve to the nearest younger entry.
    double mass_at(double age) const;
};

enum class CollapsePolicy { midpoint, lo, hi };

CollapsePolicy parse_policy(std::string_view text);
std::string_view policy_name(CollapsePolicy p);

// Replaces every range by a point value per the policy.
MeasurementRecord collapse(const MeasurementRecord& record, CollapsePolicy policy);
ReferenceDataset collapse(const ReferenceDataset& ds, CollapsePolicy policy);

// Extracts (age, value) points for one column, collapsing ranges per policy.
std::vector<std::pair<double, double>> points(const ReferenceDataset& ds, Column column,
                                              CollapsePolicy policy = CollapsePolicy::midpoint);

// CSV ingestion. Expected header: age,head_height,head_length,body_width,body_length
// (case-insensitive). Cells are either a number or a range "a-b".
ReferenceDataset parse_csv(std::string_view text);
std::string serialize_csv(const ReferenceDataset& ds);

// JSON export (array of records; ranges as [lo, hi]).
std::string to_json_string(const ReferenceDataset& ds);

// --- embedded reference data ---

// Raw survey table: per-season pixel-scaled measurements, some as ranges.
const ReferenceDataset& table1();

// Curated table: the survey's own collapse of table1 to point values.
const ReferenceDataset& table2();

// Reference body masses by age, derived in the source analysis by cubic
// model scaling. Kept as data: its model constants were never published,
// so it cannot be regenerated and is only compared against.
const MassTable& reference_mass_table();

// Cells where collapsing table1 at the midpoint does NOT reproduce table2,
// with a short note on what the curated table did instead.
struct CellException {
    double age;
    Column column;
    std::string_view note;
};

const std::vector<CellException>& collapse_exceptions();
bool is_collapse_exception(double age, Column column);

}  // namespace wyrm::dataset
