#include "stex/io.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "stex/errors.hpp"

namespace stex {

namespace {

std::string trim_number(std::string s) {
  // mpfr's str() keeps trailing zeros of the requested precision; strip
  // them (and a bare trailing '.') for stable, readable output
  const auto epos = s.find_first_of("eE");
  std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
  const std::string exp = epos == std::string::npos ? "" : s.substr(epos);
  if (mant.find('.') != std::string::npos) {
    std::size_t last = mant.find_last_not_of('0');
    if (mant[last] == '.') --last;
    mant.erase(last + 1);
  }
  return mant + exp;
}

}  // namespace

std::string to_decimal_string(const BigFloat& v, int digits) {
  if (digits <= 0) digits = static_cast<int>(working_digits());
  return trim_number(v.str(digits));
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::pair<std::string, std::string>> config_items(
    const RunConfig& cfg) {
  return {
      {"version", kVersionString},
      {"precision_digits", std::to_string(cfg.precision_digits)},
      {"max_m", std::to_string(cfg.max_m)},
      {"max_n", std::to_string(cfg.max_n)},
      {"u_max", to_decimal_string(cfg.quad.u_max, 17)},
      {"panels", std::to_string(cfg.quad.panels)},
      {"refinement_tolerance",
       to_decimal_string(cfg.quad.refinement_tolerance, 3)},
      {"filon_degree", std::to_string(cfg.quad.filon_degree)},
      {"seed", std::to_string(cfg.seed)},
      {"paths", std::to_string(cfg.paths)},
      {"grid_steps", std::to_string(cfg.grid_steps)},
      {"antithetic", cfg.antithetic ? "1" : "0"},
      {"format", cfg.format},
      {"output", cfg.output_path.empty() ? "-" : cfg.output_path},
  };
}

void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t,
               const Diagnostics& diag) {
  os << "# stable-extrema v" << kVersionString << "\n";
  os << "# generated: " << timestamp_utc() << "\n";
  os << "# config:";
  for (const auto& [k, v] : config_items(cfg))
    if (k != "version") os << ' ' << k << '=' << v;
  os << "\n";
  for (const auto& [k, v] : diag) os << "# diag: " << k << '=' << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size())
      throw DomainError("table row width does not match the column count");
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

void write_json(std::ostream& os, const RunConfig& cfg, const Table& t,
                const Diagnostics& diag) {
  nlohmann::json root;
  for (const auto& [k, v] : config_items(cfg)) root["config"][k] = v;
  root["config"]["generated"] = timestamp_utc();
  root["data"] = nlohmann::json::object();
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    auto arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
      if (row.size() != t.columns.size())
        throw DomainError("table row width does not match the column count");
      arr.push_back(row[i]);
    }
    root["data"][t.columns[i]] = std::move(arr);
  }
  root["diagnostics"] = nlohmann::json::object();
  for (const auto& [k, v] : diag) root["diagnostics"][k] = v;
  os << root.dump(2) << "\n";
}

void write_table(const RunConfig& cfg, const Table& t,
                 const Diagnostics& diag) {
  const bool json = cfg.format == "json";
  if (!json && cfg.format != "csv")
    throw DomainError("unknown output format \"" + cfg.format + "\"");
  const auto emit = [&](std::ostream& os) {
    json ? write_json(os, cfg, t, diag) : write_csv(os, cfg, t, diag);
  };
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    emit(std::cout);
  } else {
    std::ofstream f(cfg.output_path);
    if (!f) throw Error("cannot open output file " + cfg.output_path);
    emit(f);
  }
}

}  // namespace stex
