#pragma once

// Sweep configuration: a flat key=value text format where repeated keys
// extend a list. Integer values accept comma lists and inclusive ranges
// written a..b. Blank lines and lines starting with '#' are ignored.
//
//   q = 3
//   d = 2
//   n = 1..8
//   n0 = 1
//   kind = helmet-certified     # optional, repeatable
//   format = csv                # csv | json
//   out = helmet.csv            # optional, stdout when absent

#include "glq/integers.hpp"
#include "glq/statistics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

/// Malformed or inconsistent sweep configuration (a usage error).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    SweepGrid grid;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> output_path;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::int64_t parse_int(std::string_view s) {
    const std::string t = trim(s);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ConfigError("not an integer: '" + t + "'");
    return v;
}

}  // namespace detail

/// "1..4,7" -> {1, 2, 3, 4, 7}.
inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(detail::parse_int(item));
        } else {
            const std::int64_t lo = detail::parse_int(item.substr(0, dots));
            const std::int64_t hi = detail::parse_int(item.substr(dots + 2));
            if (hi < lo) throw ConfigError("empty range '" + detail::trim(item) + "'");
            if (hi - lo > 100000) throw ConfigError("range too long: '" + detail::trim(item) + "'");
            for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Applies one key=value pair. Throws ConfigError on unknown keys or bad values.
inline void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "q") {
        for (auto v : parse_int_list(value)) cfg.grid.q_list.push_back(v);
    } else if (key == "d") {
        for (auto v : parse_int_list(value)) cfg.grid.d_list.push_back(v);
    } else if (key == "n") {
        for (auto v : parse_int_list(value)) {
            if (v < 1 || v > 1000) throw ConfigError("n out of range: " + std::to_string(v));
            cfg.grid.n_list.push_back(static_cast<int>(v));
        }
    } else if (key == "n0") {
        for (auto v : parse_int_list(value)) cfg.grid.n0_list.push_back(v);
    } else if (key == "kind") {
        const auto kind = parse_report_kind(value);
        if (!kind) throw ConfigError("unknown kind '" + value + "'");
        cfg.grid.kinds.push_back(*kind);
    } else if (key == "format") {
        if (value == "csv")
            cfg.format = OutputFormat::Csv;
        else if (value == "json")
            cfg.format = OutputFormat::Json;
        else
            throw ConfigError("unknown format '" + value + "'");
    } else if (key == "out") {
        cfg.output_path = value;
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

inline SweepConfig parse_config_text(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = detail::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        try {
            apply_config_entry(cfg, detail::trim(body.substr(0, eq)), detail::trim(body.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

/// Fills defaults (n0 = 1) and checks the invariants a sweep relies on.
inline void validate_config(SweepConfig& cfg) {
    auto& g = cfg.grid;
    if (g.q_list.empty()) throw ConfigError("no q values given");
    if (g.d_list.empty()) throw ConfigError("no d values given");
    if (g.n_list.empty()) throw ConfigError("n range is empty");
    for (auto q : g.q_list)
        if (!is_prime_power(q)) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
    for (auto d : g.d_list)
        if (d < 1) throw ConfigError("d must be positive");

    bool helmet = std::find(g.kinds.begin(), g.kinds.end(), ReportKind::HelmetCertified) != g.kinds.end();
    if (g.kinds.empty())
        for (auto q : g.q_list)
            for (auto d : g.d_list) helmet = helmet || gcd_i64(q, d) == 1;
    if (!helmet) return;
    if (g.n0_list.empty()) g.n0_list.push_back(1);
    const int n_min = *std::min_element(g.n_list.begin(), g.n_list.end());
    for (auto n0 : g.n0_list)
        if (n0 < 1 || n0 > n_min)
            throw ConfigError("n0 = " + std::to_string(n0) + " must lie in 1..min(n) = 1.." + std::to_string(n_min));
}

}  // namespace glq
