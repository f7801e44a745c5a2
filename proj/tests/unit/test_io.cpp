#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stex/errors.hpp"
#include "stex/io.hpp"

using namespace stex;

namespace {
std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("generated") == std::string::npos) out << line << "\n";
  return out.str();
}

Table sample_table() {
  Table t;
  t.columns = {"x", "p"};
  t.rows = {{"0.5", "0.53135958"}, {"1", "0.46610622"}};
  return t;
}
}  // namespace

TEST_CASE("decimal rendering trims padding and round-trips") {
  CHECK(to_decimal_string(BigFloat("0.125"), 10) == "0.125");
  CHECK(to_decimal_string(BigFloat(40), 17) == "40");
  CHECK(to_decimal_string(BigFloat(0), 10) == "0");
  for (const char* s : {"0.3333333333333333333333333333333333", "1e-9",
                        "123456.789", "-2.5e300"}) {
    const BigFloat v(s);
    CHECK(BigFloat(to_decimal_string(v, 40)) == v);
  }
}

TEST_CASE("csv output carries provenance and data") {
  RunConfig cfg;
  cfg.seed = 9;
  std::ostringstream os;
  write_csv(os, cfg, sample_table(), {{"note", "demo"}});
  const std::string text = os.str();
  CHECK(text.rfind("# stable-extrema v0.1.0\n# generated: ", 0) == 0);
  CHECK(text.find(" precision_digits=34 ") != std::string::npos);
  CHECK(text.find(" seed=9 ") != std::string::npos);
  CHECK(text.find(" u_max=40 ") != std::string::npos);
  CHECK(text.find("# diag: note=demo\n") != std::string::npos);
  CHECK(text.find("\nx,p\n0.5,0.53135958\n1,0.46610622\n") !=
        std::string::npos);

  // reruns are byte-identical up to the timestamp line
  std::ostringstream os2;
  write_csv(os2, cfg, sample_table(), {{"note", "demo"}});
  CHECK(strip_timestamp(os2.str()) == strip_timestamp(text));
}

TEST_CASE("json output is a config/data/diagnostics object") {
  RunConfig cfg;
  cfg.format = "json";
  std::ostringstream os;
  write_json(os, cfg, sample_table(), {{"delta", "1e-10"}});
  const auto root = nlohmann::json::parse(os.str());
  CHECK(root["config"]["version"] == "0.1.0");
  CHECK(root["config"]["precision_digits"] == "34");
  CHECK(root["config"].contains("generated"));
  CHECK(root["data"]["x"] == nlohmann::json({"0.5", "1"}));
  CHECK(root["data"]["p"].size() == 2);
  CHECK(root["diagnostics"]["delta"] == "1e-10");
}

TEST_CASE("write_table dispatches to files and rejects unknown formats") {
  RunConfig cfg;
  cfg.output_path = "/tmp/stex_io_test.csv";
  write_table(cfg, sample_table());
  std::ifstream f(cfg.output_path);
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first == "# stable-extrema v0.1.0");
  f.close();
  std::remove(cfg.output_path.c_str());

  cfg.format = "yaml";
  CHECK_THROWS_AS(write_table(cfg, sample_table()), DomainError);
}

TEST_CASE("ragged rows are rejected") {
  RunConfig cfg;
  Table bad;
  bad.columns = {"a", "b"};
  bad.rows = {{"1"}};
  std::ostringstream os;
  CHECK_THROWS_AS(write_csv(os, cfg, bad), DomainError);
  CHECK_THROWS_AS(write_json(os, cfg, bad), DomainError);
}
