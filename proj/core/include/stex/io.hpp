#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stex/bigfloat.hpp"
#include "stex/inversion.hpp"

namespace stex {

inline constexpr const char* kVersionString = "0.1.0";

/// Run-wide knobs, echoed verbatim into every output file so a result can
/// be reproduced from its own header.
struct RunConfig {
  int precision_digits = kDefaultDigits;
  long max_m = 200;  // series truncation orders
  long max_n = 200;
  QuadConfig quad;
  std::uint64_t seed = 1;
  long paths = 10000;  // Monte-Carlo controls
  long grid_steps = 100;
  bool antithetic = false;
  std::string format = "csv";  // csv | json
  std::string output_path;     // empty or "-" -> stdout
};

/// Ordered (key, value) rendering of every RunConfig field, shared by the
/// CSV and JSON writers so both formats carry identical provenance.
std::vector<std::pair<std::string, std::string>> config_items(
    const RunConfig& cfg);

/// Decimal rendering ('.' decimal point, C locale) with the requested
/// significant digits; digits <= 0 prints the full working precision.
std::string to_decimal_string(const BigFloat& v, int digits);

/// Current wall clock as UTC ISO-8601; isolated here so both writers put it
/// on a line of its own (reruns must be byte-identical except that line).
std::string timestamp_utc();

/// Column-oriented payload; all values pre-rendered as strings so 34-digit
/// floats and arbitrary-size integers survive a round trip.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // each row matches columns
};

using Diagnostics = std::vector<std::pair<std::string, std::string>>;

/// '#'-prefixed provenance (version, timestamp, config, diagnostics), then
/// a header row, then comma-separated data rows.
void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t,
               const Diagnostics& diag = {});

/// One top-level object {"config", "data", "diagnostics"}; data maps each
/// column name to an array of value strings.
void write_json(std::ostream& os, const RunConfig& cfg, const Table& t,
                const Diagnostics& diag = {});

/// Dispatches on cfg.format and cfg.output_path (stdout when empty / "-").
void write_table(const RunConfig& cfg, const Table& t,
                 const Diagnostics& diag = {});

}  // namespace stex
