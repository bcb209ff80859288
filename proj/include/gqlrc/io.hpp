#pragma once

#include "gqlrc/codes.hpp"
#include "gqlrc/egg.hpp"
#include "gqlrc/gq.hpp"
#include "gqlrc/lrc.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gqlrc {

using json = nlohmann::json;

// --- egg files --------------------------------------------------------------
// {"p":..,"h":..,"n":..,"m":..,"elements":[basis..],"tangents":[basis..]}
// where a basis is a list of rows and every entry is the coefficient list of
// a field element (h coefficients, constant term first). Coordinates are
// relative to the deterministic modulus for (p,h).
json egg_to_json(const Egg& egg);
Egg egg_from_json(const json& j);

// Parses and verifies; the report carries any axiom failures.
Egg load_egg(const std::string& path, EggReport* report = nullptr);
void save_egg(const Egg& egg, const std::string& path);

// --- incidence structures ----------------------------------------------------
// {"params":{"s":..,"t":..,"alpha":..},"points":[{"id":..,"type":..}],
//  "lines":[{"id":..,"type":..,"points":[..]}],"kind":..}
json structure_to_json(const IncidenceStructure& is);
IncidenceStructure structure_from_json(const json& j);

// --- reports ------------------------------------------------------------------
json report_to_json(const MinWeightReport& rep);
json profile_to_json(const RepairProfile& prof);

// --- code export ---------------------------------------------------------------
json code_to_json(const LinearCode& code,
                  const std::vector<std::vector<std::uint8_t>>& rows);
// reads back the {p, rows} payload written by code_to_json
std::pair<unsigned, std::vector<std::vector<std::uint8_t>>> code_rows_from_json(
    const json& j);

// MacKay alist text for a 0/1 matrix: "ncols nrows", max column/row degrees,
// per-column and per-row degree lists, then 1-based column-wise and row-wise
// index lists; single spaces, every line newline-terminated.
std::string to_alist(const std::vector<std::vector<std::uint8_t>>& rows);
std::vector<std::vector<std::uint8_t>> from_alist(const std::string& text);

std::string to_csv(const std::vector<std::vector<std::uint8_t>>& rows);
std::vector<std::vector<std::uint8_t>> from_csv(const std::string& text);

// --- small file helpers ---------------------------------------------------------
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace gqlrc
