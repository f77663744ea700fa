#pragma once

#include "sturmia/intercept.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>

namespace sturmia {

enum class OutputFormat { text, json, csv, dot };

std::string to_string(OutputFormat f);
OutputFormat parse_format(std::string_view s);

struct RunConfig {
    std::string command;  // "word prefix", "ostrowski encode", ...
    std::string slope;
    std::size_t depth = 24;
    std::string intercept;  // as typed: integer, "b:..." or a name
    std::optional<OutputFormat> format;
    bool verify = false;  // --oracle, --verify-duality

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
    bool operator==(const RunConfig&) const = default;
};

// STURMIA_DEPTH when set to a positive integer, else 24.
std::size_t default_depth();

// Decimal integer, little-endian "b:0,1,0,1", or sigma0 | sigma1 | zero.
AlphaNumber parse_intercept(std::string_view spec, const ContinuantTable& t, std::size_t depth);

nlohmann::json digits_json(const OstrowskiDigits& d);
nlohmann::json alpha_json(const AlphaNumber& rho);

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sturmia
