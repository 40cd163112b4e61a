#include "wyrm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace wyrm::dataset {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// A cell is either "x" or "a-b". The dash that splits a range is never the
// first character and never part of an exponent.
bool parse_cell(std::string_view raw, ValueRange& out) {
    const std::string cell = trim(raw);
    if (cell.empty()) return false;
    double point = 0.0;
    if (parse_double(cell, point)) {
        out = ValueRange(point);
        return true;
    }
    for (size_t i = 1; i + 1 < cell.size(); ++i) {
        if (cell[i] != '-') continue;
        const char prev = cell[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        double lo = 0.0, hi = 0.0;
        if (parse_double(trim(cell.substr(0, i)), lo) &&
            parse_double(trim(cell.substr(i + 1)), hi)) {
            out = ValueRange(lo, hi);
            return true;
        }
    }
    return false;
}

void validate_range(const ValueRange& r, const char* what) {
    if (!(std::isfinite(r.lo) && std::isfinite(r.hi)))
        throw ValidationError(std::string(what) + ": bounds must be finite");
    if (!(r.lo > 0.0))
        throw ValidationError(std::string(what) + ": bounds must be positive");
    if (!(r.lo <= r.hi))
        throw ValidationError(std::string(what) + ": lo must not exceed hi");
}

constexpr std::string_view kHeader[] = {"age", "head_height", "head_length", "body_width",
                                        "body_length"};

}  // namespace

std::string_view column_name(Column c) {
    switch (c) {
        case Column::head_height: return "head_height";
        case Column::head_length: return "head_length";
        case Column::body_width: return "body_width";
        case Column::body_length: return "body_length";
    }
    return "?";
}

const ValueRange& MeasurementRecord::at(Column c) const {
    switch (c) {
        case Column::head_height: return head_height;
        case Column::head_length: return head_length;
        case Column::body_width: return body_width;
        case Column::body_length: return body_length;
    }
    throw ValidationError("bad column");
}

ValueRange& MeasurementRecord::at(Column c) {
    return const_cast<ValueRange&>(static_cast<const MeasurementRecord&>(*this).at(c));
}

void validate(const ReferenceDataset& ds) {
    double prev_age = -1.0;
    for (const auto& rec : ds.records) {
        if (!(rec.age >= 0.0)) throw ValidationError("age must be nonnegative");
        if (!(rec.age > prev_age)) throw ValidationError("ages must be strictly increasing");
        prev_age = rec.age;
        for (Column c : kColumns) validate_range(rec.at(c), column_name(c).data());
    }
}

double MassTable::mass_at(double age) const {
    if (entries.empty()) throw ValidationError("empty mass table");
    const MassEntry* best = &entries.front();
    for (const auto& e : entries)
        if (e.age <= age) best = &e;
    return best->mass;
}

CollapsePolicy parse_policy(std::string_view text) {
    if (text == "midpoint") return CollapsePolicy::midpoint;
    if (text == "lo") return CollapsePolicy::lo;
    if (text == "hi") return CollapsePolicy::hi;
    throw ValidationError("unknown collapse policy: " + std::string(text));
}

std::string_view policy_name(CollapsePolicy p) {
    switch (p) {
        case CollapsePolicy::midpoint: return "midpoint";
        case CollapsePolicy::lo: return "lo";
        case CollapsePolicy::hi: return "hi";
    }
    return "?";
}

MeasurementRecord collapse(const MeasurementRecord& record, CollapsePolicy policy) {
    MeasurementRecord out = record;
    for (Column c : kColumns) {
        const ValueRange& r = record.at(c);
        double v = 0.0;
        switch (policy) {
            case CollapsePolicy::midpoint: v = r.midpoint(); break;
            case CollapsePolicy::lo: v = r.lo; break;
            case CollapsePolicy::hi: v = r.hi; break;
        }
        out.at(c) = ValueRange(v);
    }
    return out;
}

ReferenceDataset collapse(const ReferenceDataset& ds, CollapsePolicy policy) {
    ReferenceDataset out = ds;
    for (auto& rec : out.records) rec = collapse(rec, policy);
    return out;
}

std::vector<std::pair<double, double>> points(const ReferenceDataset& ds, Column column,
                                              CollapsePolicy policy) {
    std::vector<std::pair<double, double>> out;
    out.reserve(ds.records.size());
    for (const auto& rec : ds.records)
        out.emplace_back(rec.age, collapse(rec, policy).at(column).lo);
    return out;
}

ReferenceDataset parse_csv(std::string_view text) {
    std::vector<std::string> lines;
    {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            std::string line(text.substr(pos, nl - pos));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(std::move(line));
            pos = nl + 1;
        }
    }

    size_t row = 0;
    bool header_seen = false;
    ReferenceDataset ds;
    ds.name = "csv";
    for (const std::string& line : lines) {
        ++row;
        if (trim(line).empty()) continue;

        std::vector<std::string> cells;
        {
            size_t pos = 0;
            while (true) {
                size_t comma = line.find(',', pos);
                if (comma == std::string::npos) {
                    cells.push_back(line.substr(pos));
                    break;
                }
                cells.push_back(line.substr(pos, comma - pos));
                pos = comma + 1;
            }
        }
        if (cells.size() != 5)
            throw ParseError("expected 5 columns, got " + std::to_string(cells.size()) +
                                 " (row " + std::to_string(row) + ")",
                             row);

        if (!header_seen) {
            for (size_t i = 0; i < 5; ++i) {
                if (lower(trim(cells[i])) != kHeader[i])
                    throw ParseError("bad header column " + std::to_string(i + 1) +
                                         ": expected '" + std::string(kHeader[i]) + "', got '" +
                                         trim(cells[i]) + "'",
                                     row, i + 1);
            }
            header_seen = true;
            continue;
        }

        MeasurementRecord rec;
        double age = 0.0;
        if (!parse_double(trim(cells[0]), age))
            throw ParseError("malformed age cell '" + trim(cells[0]) + "' (row " +
                                 std::to_string(row) + ", col 1)",
                             row, 1);
        rec.age = age;
        for (size_t i = 0; i < 4; ++i) {
            ValueRange r;
            if (!parse_cell(cells[i + 1], r))
                throw ParseError("malformed cell '" + trim(cells[i + 1]) + "' (row " +
                                     std::to_string(row) + ", col " + std::to_string(i + 2) + ")",
                                 row, i + 2);
            rec.at(kColumns[i]) = r;
        }
        ds.records.push_back(rec);
    }

    if (!header_seen) throw ParseError("missing header row", 0);
    if (ds.records.empty()) throw EmptyDataset("CSV contains a header but no data rows");

    std::stable_sort(ds.records.begin(), ds.records.end(),
                     [](const auto& a, const auto& b) { return a.age < b.age; });
    for (size_t i = 1; i < ds.records.size(); ++i)
        if (ds.records[i].age == ds.records[i - 1].age)
            throw DuplicateAge("duplicate age " + format_double(ds.records[i].age));

    validate(ds);
    return ds;
}

std::string serialize_csv(const ReferenceDataset& ds) {
    std::ostringstream out;
    out << "age,head_height,head_length,body_width,body_length\n";
    for (const auto& rec : ds.records) {
        out << format_double(rec.age);
        for (Column c : kColumns) {
            const ValueRange& r = rec.at(c);
            out << ',' << format_double(r.lo);
            if (!r.is_point()) out << '-' << format_double(r.hi);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json_string(const ReferenceDataset& ds) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : ds.records) {
        nlohmann::ordered_json j;
        j["age"] = rec.age;
        for (Column c : kColumns)
            j[std::string(column_name(c))] = {rec.at(c).lo, rec.at(c).hi};
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

namespace {

MeasurementRecord rec(double age, ValueRange hh, ValueRange hl, ValueRange bw, ValueRange bl) {
    MeasurementRecord r;
    r.age = age;
    r.head_height = hh;
    r.head_length = hl;
    r.body_width = bw;
    r.body_length = bl;
    return r;
}

}  // namespace

const ReferenceDataset& table1() {
    // Raw survey values. Where the survey printed a parenthesized corrected
    // value next to an eyeball estimate (head height at ages 4, 6, 7), the
    // corrected value is stored as the point estimate; trailing ellipses on
    // body lengths are truncation markers and only the printed digits are kept.
    static const ReferenceDataset ds = [] {
        ReferenceDataset d;
        d.name = "table1";
        d.provenance = "per-season screen-scaled measurements (raw, with uncertainty ranges)";
        d.records = {
            rec(0.0, 0.046, 0.0575, 0.050, 0.436),
            rec(0.5, {0.034, 0.046}, {0.044, 0.059}, {0.037, 0.050}, 0.520),
            rec(2.0, {0.122, 0.133}, 0.138, {0.132, 0.144}, 1.65),
            rec(3.0, 0.253, 0.0575, 0.275, 4.408),
            rec(4.0, 0.57, 0.735, 0.619, 12.988),
            rec(5.0, {1.03, 1.076}, {1.65, 1.719}, {1.12, 1.78}, 30.59),
            rec(6.0, 2.04, {2.16, 2.57}, 2.22, 37.08),
            rec(7.0, 2.04, {2.16, 2.57}, 2.22, 53.26),
        };
        validate(d);
        return d;
    }();
    return ds;
}

const ReferenceDataset& table2() {
    static const ReferenceDataset ds = [] {
        ReferenceDataset d;
        d.name = "table2";
        d.provenance = "curated point estimates (the survey's own collapse of table1)";
        d.records = {
            rec(0.0, 0.046, 0.0575, 0.050, 0.436),
            rec(0.5, 0.046, 0.059, 0.050, 0.956),
            rec(2.0, 0.128, 0.138, 0.138, 2.900),
            rec(3.0, 0.253, 0.275, 0.275, 6.396),
            rec(4.0, 0.57, 0.735, 0.619, 13.953),
            rec(5.0, 1.053, 1.685, 1.45, 31.239),
            rec(6.0, 2.04, 2.365, 2.22, 40.748),
            rec(7.0, 2.04, 2.57, 2.22, 49.758),
        };
        validate(d);
        return d;
    }();
    return ds;
}

const MassTable& reference_mass_table() {
    static const MassTable table = [] {
        MassTable t;
        t.entries = {
            {0.0, 2.60}, {0.5, 3.70},     {2.0, 98.38},     {3.0, 1947.54},
            {4.0, 7544.14}, {5.0, 90089.83}, {6.0, 251328.27},  // 6 and older
        };
        return t;
    }();
    return table;
}

const std::vector<CellException>& collapse_exceptions() {
    // Every cell where the curated table is not the midpoint of the raw range.
    // Body lengths diverge wholesale: the curated column was re-derived from
    // head-size ratios rather than collapsed from the raw column.
    static const std::vector<CellException> ex = {
        {0.5, Column::head_height, "curated table keeps the upper bound 0.046"},
        {0.5, Column::head_length, "curated table keeps the upper bound 0.059"},
        {0.5, Column::body_width, "curated table keeps the upper bound 0.050"},
        {0.5, Column::body_length, "curated value 0.956 re-derived, raw prints 0.520"},
        {2.0, Column::head_height, "curated 0.128 rounds the midpoint 0.1275"},
        {2.0, Column::body_length, "curated value 2.900 re-derived, raw prints 1.65"},
        {3.0, Column::head_length,
         "raw prints 0.0575 (identical to age 0) while curated prints 0.275; "
         "almost certainly a transcription slip in the raw table"},
        {3.0, Column::body_length, "curated value 6.396 re-derived, raw prints 4.408"},
        {4.0, Column::body_length, "curated value 13.953 re-derived, raw prints 12.988"},
        {5.0, Column::head_length, "curated 1.685 rounds the midpoint 1.6845"},
        {5.0, Column::body_length, "curated value 31.239 re-derived, raw prints 30.59"},
        {6.0, Column::body_length, "curated value 40.748 re-derived, raw prints 37.08"},
        {7.0, Column::head_length, "curated table keeps the upper bound 2.57"},
        {7.0, Column::body_length, "curated value 49.758 re-derived, raw prints 53.26"},
    };
    return ex;
}

bool is_collapse_exception(double age, Column column) {
    for (const auto& e : collapse_exceptions())
        if (e.age == age && e.column == column) return true;
    return false;
}

}  // namespace wyrm::dataset
