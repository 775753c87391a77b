#pragma once

// Table serialization for sweep output.
//
// CSV: header `kind,n,q,d,n0,numerator,denominator,decimal`, one row per
// report, LF line endings. The decimal column has 6 places, rounded half to
// even; numerator and denominator are the exact values.
// JSON: {"rows": [...], "errors": [...]}, big integers as decimal strings.

#include "glq/integers.hpp"
#include "glq/statistics.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace glq {

inline constexpr const char* kCsvHeader = "kind,n,q,d,n0,numerator,denominator,decimal";

inline std::string emit_csv(const std::vector<ProportionReport>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows)
        out << to_string(r.kind) << ',' << r.n << ',' << r.q << ',' << r.d << ',' << r.n0 << ','
            << r.numerator.str() << ',' << r.denominator.str() << ',' << r.decimal() << '\n';
    return out.str();
}

/// Inverse of emit_csv. Throws std::invalid_argument on malformed input,
/// including a decimal column that disagrees with numerator/denominator.
inline std::vector<ProportionReport> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("csv: missing header");
    std::vector<ProportionReport> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
        if (f.size() != 8) throw std::invalid_argument("csv: expected 8 fields in '" + line + "'");
        const auto kind = parse_report_kind(f[0]);
        if (!kind) throw std::invalid_argument("csv: unknown kind '" + f[0] + "'");
        ProportionReport r;
        try {
            r.kind = *kind;
            r.n = std::stoi(f[1]);
            r.q = std::stoll(f[2]);
            r.d = std::stoll(f[3]);
            r.n0 = std::stoll(f[4]);
            r.numerator = BigInt(f[5]);
            r.denominator = BigInt(f[6]);
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("csv: bad field in '") + line + "': " + e.what());
        }
        if (r.decimal() != f[7]) throw std::invalid_argument("csv: decimal column disagrees in '" + line + "'");
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::json to_json(const ProportionReport& r) {
    return {{"kind", to_string(r.kind)},  {"n", r.n},
            {"q", r.q},                   {"d", r.d},
            {"n0", r.n0},                 {"numerator", r.numerator.str()},
            {"denominator", r.denominator.str()}, {"decimal", r.decimal()}};
}

inline std::string emit_json(const SweepTable& table) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : table.rows) doc["rows"].push_back(to_json(r));
    doc["errors"] = nlohmann::json::array();
    for (const auto& e : table.errors)
        doc["errors"].push_back({{"kind", to_string(e.kind)}, {"n", e.n}, {"q", e.q}, {"d", e.d}, {"n0", e.n0},
                                 {"message", e.message}});
    return doc.dump(2) + "\n";
}

/// Rows of an emit_json document. Throws std::invalid_argument on malformed input.
inline std::vector<ProportionReport> parse_json_rows(const std::string& text) {
    std::vector<ProportionReport> rows;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& j : doc.at("rows")) {
            const auto kind = parse_report_kind(j.at("kind").get<std::string>());
            if (!kind) throw std::invalid_argument("json: unknown kind");
            ProportionReport r;
            r.kind = *kind;
            r.n = j.at("n").get<int>();
            r.q = j.at("q").get<std::int64_t>();
            r.d = j.at("d").get<std::int64_t>();
            r.n0 = j.at("n0").get<std::int64_t>();
            r.numerator = BigInt(j.at("numerator").get<std::string>());
            r.denominator = BigInt(j.at("denominator").get<std::string>());
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
    return rows;
}

}  // namespace glq
