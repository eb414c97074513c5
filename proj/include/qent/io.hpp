#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "qent/record.hpp"
#include "qent/scenario.hpp"

namespace qent {

// CSV with the exact header `t_over_T,E_f,E_av,E_h,S_rho,I_SE`, one row per
// record, fixed-point values with 12 decimals, LF line endings. Identical
// records always produce byte-identical output.
void write_csv(std::span<const TimeSeriesRecord> records, std::ostream &out);
void write_csv(std::span<const TimeSeriesRecord> records, const std::filesystem::path &destination);

// JSON array of objects keyed exactly like the CSV columns; doubles carry
// enough digits to round-trip.
void write_json(std::span<const TimeSeriesRecord> records, std::ostream &out);
void write_json(std::span<const TimeSeriesRecord> records, const std::filesystem::path &destination);

// Parses and validates a JSON scenario document. Recognized keys:
//   omega          number > 0          (default 2*pi)
//   t_max_over_T   number > 0          (default 1.0)
//   points         integer >= 3        (default 1001)
//   initial_state  {"type":"bell","which":...} |
//                  {"type":"eta_mixture","eta":...} |
//                  {"type":"explicit","matrix":[[...4x4...]]}   (required)
//   branches       [{"p":...,"qubit":"A"|"B","axis":"x"|"y"|"z"
//                    or "unitary":[[...2x2...]],"omega":...}, ...] (required)
// Matrix entries are numbers or [re, im] pairs. Unknown keys are rejected;
// every error message names the offending key.
ScenarioConfig parse_config(const std::string &text);

} // namespace qent
