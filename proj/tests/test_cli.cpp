#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_commands.hpp"

using json = nlohmann::json;
using seqinv::cli::run;

namespace {

struct Result {
  int code = 0;
  json report;
  std::string text;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.text = out.str();
  if (!r.text.empty() && r.text.front() == '{') r.report = json::parse(r.text);
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("invert reproduces the three-variable example") {
  auto r = call({"invert", "--bits", "0111000", "--m", "3", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.report["schema_version"] == 1);
  CHECK(r.report["command"] == "invert");
  CHECK(r.report["status"] == "ok");
  CHECK(r.report["inverse"] == "1");
  CHECK(r.report["polynomial"] == "x0*x2 + x1*x2");
  CHECK(r.report["m"] == 3);
  CHECK(r.report["d"] == 2);
  CHECK(r.report["n_C"] == 6);
  CHECK(r.report["rank"] == 4);
  CHECK(r.report["common_inverse"] == false);
  CHECK(r.report["inputs"]["m"] == 3);
  CHECK(r.report.contains("timing_ms"));
  CHECK(r.report.contains("coefficients"));
  CHECK(r.report.contains("family_size"));
  CHECK(r.report.contains("inverse_classes"));
  CHECK(r.text.find('\n') == r.text.size() - 1);
}

TEST_CASE("invert on a two-coordinate file") {
  auto path = temp_file("seqinv_cli_vec.txt", "0111000\n1110001\n\n");
  auto r = call({"invert", "--seq", path.string(), "--m", "3", "--d", "1", "--allow-constant"});
  CHECK(r.code == 0);
  CHECK(r.report["inverse"] == "00");
  CHECK(r.report["polynomial"] == "x0 + 1");
  CHECK(r.report["common_inverse"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("custom monomial sets") {
  auto r = call({"invert", "--bits", "0111000", "--mset", "x0*x2, x1*x2, x0, x2"});
  CHECK(r.code == 0);
  CHECK(r.report["m"] == 3);
  CHECK(r.report["d"].is_null());
  CHECK(r.report["inputs"]["mset"] == "x0*x2, x1*x2, x0, x2");
}

TEST_CASE("no solution exits with 3") {
  auto r = call({"invert", "--bits", "1110001", "--m", "3", "--d", "1"});
  CHECK(r.code == 3);
  CHECK(r.report["status"] == "no_solution");
  CHECK(r.report["inverse"].is_null());
  CHECK(r.report["inversion_status"] == "no_associated");
}

TEST_CASE("bad input exits with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"invert", "--bits", "01x1000", "--m", "3", "--d", "2"},
           {"invert", "--bits", "0111000", "--m", "3", "--d", "4"},
           {"invert", "--bits", "0111000"},
           {"pci", "--bits", "0111000"},
           {"invert", "--bits", "0111000", "--mset", "x0*"},
           {"localinv", "--map", "fsr:m=3;g=x1", "--y", "10", "--steps", "8"},
           {"localinv", "--map", "nope", "--y", "100", "--steps", "8"},
           {"conjecture", "--config", "/nonexistent.cfg"},
           {"frobnicate"},
       }) {
    auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.report["status"] == "bad_input");
    CHECK(r.report.contains("error"));
  }
}

TEST_CASE("pci, lc and moc") {
  auto p = call({"pci", "--bits", "011011011011011011011011", "--d", "1"});
  CHECK(p.code == 0);
  CHECK(p.report["m"] == 2);
  CHECK(p.report["inverse"] == "1");
  CHECK(p.report["pci_status"] == "found");
  CHECK(p.report["rank_profile"].is_array());
  for (const auto& e : p.report["rank_profile"]) CHECK(e.contains("exact"));

  auto l = call({"lc", "--bits", "110110110110110110110110"});
  CHECK(l.code == 0);
  CHECK(l.report["m"] == 2);
  CHECK(l.report["linear_complexity"] == 2);
  CHECK(l.report["inverse"] == "0");

  auto m = call({"moc", "--bits", "0111000"});
  CHECK(m.code == 0);
  CHECK(m.report["moc"] == 3);
  CHECK(m.report["degenerate"] == false);
}

TEST_CASE("golomb") {
  auto g = call({"golomb", "--bits", "10011100", "--m", "3", "--d", "2"});
  CHECK(g.code == 0);
  CHECK(g.report["family"].is_array());
  bool found = false;
  for (const auto& e : g.report["family"]) {
    if (e["g"] == "x1*x2 + x1 + x2") {
      found = true;
      CHECK(e["inverse"] == "1");
    }
  }
  CHECK(found);
}

TEST_CASE("localinv") {
  auto r = call({"localinv", "--map", "fsr:m=3;g=x1", "--y", "100", "--steps", "16", "--d", "1"});
  CHECK(r.code == 0);
  CHECK(r.report["candidate"] == "110");
  CHECK(r.report["verified"] == true);
  CHECK(r.report["length"] == 16);
}

TEST_CASE("conjecture") {
  auto path = temp_file("seqinv_cli_conj.cfg", "generator=fsr\nN=64\nM=32\nd=2\norder=4\ntrials=4\nseed=3\n");
  auto r = call({"conjecture", "--config", path.string(), "--records"});
  CHECK(r.code == 0);
  CHECK(r.report["records"].size() == 4);
  CHECK(r.report["report"].contains("p0"));
  auto again = call({"conjecture", "--config", path.string(), "--records"});
  CHECK(again.report["records"] == r.report["records"]);
  std::filesystem::remove(path);
}

TEST_CASE("help") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.text.find("invert") != std::string::npos);
}
