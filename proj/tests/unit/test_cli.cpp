#include <doctest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "input_parsing.hpp"
#include "json_writer.hpp"
#include "vml/error.hpp"

using namespace vml;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / ("vml_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("no-go command") {
  const Run r = run({"pi1-nogo", "--g", "2", "--n", "2", "--d", "3"});
  CHECK(r.status == 0);
  const auto j = parse(r.out);
  CHECK(j["results"]["pi1_abelian"] == true);
  CHECK(j["results"]["max_irreducible_rank"] == 1);
  CHECK(j["results"]["rep_variety_dim"] == 4);
  CHECK(j.contains("tool_version"));
  CHECK(j["config_echo"].contains("seed"));
  CHECK(run({"pi1", "nogo", "--g", "2", "--n", "2", "--d", "3"}).out == r.out);
  CHECK(run({"pi1-nogo", "--g", "2", "--n", "2", "--d", "1"}).status == 1);
}

TEST_CASE("infeasible vortex problem exits 2 and reports the margin") {
  const Run r = run({"vortex-solve", "--torus", "3,3", "--points", "1+1i"});
  CHECK(r.status == 2);
  const auto j = parse(r.out);
  CHECK(j["diagnostics"]["bradlow_margin"]["value"].get<double>() < 0.0);
  CHECK(j["diagnostics"]["bradlow_margin"].contains("tolerance"));
}

TEST_CASE("vortex solve output names a tolerance for every diagnostic") {
  const Run r = run({"vortex", "solve", "--volume", "50", "--points", "1+2i,4.5+i:2", "--grid", "64"});
  REQUIRE(r.status == 0);
  const auto j = parse(r.out);
  CHECK(j["results"]["converged"] == true);
  CHECK(j["results"]["flux"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  for (auto it = j["diagnostics"].begin(); it != j["diagnostics"].end(); ++it) {
    CHECK(it.value().contains("value"));
    CHECK(it.value().contains("tolerance"));
    const double v = it.value()["value"].get<double>(), tol = it.value()["tolerance"].get<double>();
    if (it.value().value("must_exceed", false)) CHECK(v > tol);
    else CHECK(v <= tol);
  }
}

TEST_CASE("strata command") {
  const Run r = run({"strata-enum", "--d", "1", "--n", "1", "--g", "1"});
  CHECK(r.status == 0);
  const auto j = parse(r.out);
  REQUIRE(j["results"]["strata"].size() == 1);
  CHECK(j["results"]["strata"][0]["total_dim"] == 1);
  CHECK(j["results"]["sym_betti"] == nlohmann::json::array({"1", "2", "1"}));
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).status == 64);
  CHECK(run({}).status == 64);
  CHECK(run({"pi1-moduli", "--g", "2"}).status == 64);
  CHECK(run({"pi1-moduli", "--g", "x", "--n", "1", "--d", "2"}).status == 64);
  CHECK(run({"pi1-moduli", "--bogus", "1"}).status == 64);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("identical configuration gives byte-identical output") {
  const std::vector<std::string> args{"hecke-build", "--n", "2", "--datum", ""};
  const fs::path dir = scratch_dir();
  write_text(dir / "datum.json",
             R"({"groups": [{"point": "0", "hyperplanes": [[1, 0], [0, 1]]}, {"point": "2-i", "hyperplanes": [[1, "i"]]}]})");
  auto a = args;
  a.back() = (dir / "datum.json").string();
  const Run r1 = run(a), r2 = run(a);
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);
  const auto j = parse(r1.out);
  CHECK(j["results"]["local_types"][0]["exponents"] == nlohmann::json::array({1, 1}));
  CHECK(j["results"]["determinant"]["coefficients"].size() == 4);

  const Run v1 = run({"vortex-solve", "--volume", "40", "--points", "1+i", "--grid", "32", "--seed", "5"});
  const Run v2 = run({"vortex-solve", "--volume", "40", "--points", "1+i", "--grid", "32", "--seed", "5"});
  CHECK(v1.out == v2.out);
  CHECK(parse(v1.out)["config_echo"]["seed"] == 5);
  fs::remove_all(dir);
}

TEST_CASE("malformed input files report line and column") {
  const fs::path dir = scratch_dir();
  write_text(dir / "bad.json", "{\"groups\": [\n  {\"point\": \"0\",, }\n]}");
  const Run r = run({"hecke-build", "--n", "2", "--datum", (dir / "bad.json").string()});
  CHECK(r.status == 1);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("config file, output file and field dump") {
  const fs::path dir = scratch_dir();
  write_text(dir / "cfg.json", R"({"g": 1, "n": 2, "d": 2, "out": ")" + (dir / "o.json").string() + "\"}");
  const Run r = run({"pi1-moduli", "--config", (dir / "cfg.json").string(), "--g", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "o.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = parse(ss.str());
  CHECK(j["results"]["invariants"]["free_rank"] == 6);  // the flag overrides the file
  CHECK(j["config_echo"]["n"] == "2");
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);

  const Run v = run({"vortex-solve", "--volume", "40", "--points", "1+i", "--grid", "16",
                     "--field-csv", (dir / "u.csv").string()});
  CHECK(v.status == 0);
  CHECK(fs::exists(dir / "u.csv"));
  fs::remove_all(dir);
}

TEST_CASE("point and torus parsing") {
  const auto d = cli::parse_points("1+2i:2,-0.5-i,3i:1,2.5");
  CHECK(d.degree() == 5);
  CHECK(d.multiplicity_at({1.0, 2.0}) == 2);
  CHECK(d.multiplicity_at({-0.5, -1.0}) == 1);
  CHECK(d.multiplicity_at({0.0, 3.0}) == 1);
  CHECK(d.multiplicity_at({2.5, 0.0}) == 1);
  CHECK(cli::parse_complex("1e-3+i2") == std::complex<double>(1e-3, 2.0));
  CHECK_THROWS_AS(cli::parse_points("1+2i:0"), ParseError);
  CHECK_THROWS_AS(cli::parse_points("1+2i,,3"), ParseError);
  try {
    cli::parse_points("1+2i,zz");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK(cli::parse_torus("2,3").volume() == doctest::Approx(6.0));
  CHECK(cli::parse_torus("2").volume() == doctest::Approx(4.0));
}

TEST_CASE("canonical JSON formatting") {
  nlohmann::json j = {{"b", 0.1}, {"a", {1, 2}}, {"c", std::nan("")}};
  const std::string s = cli::canonical_dump(j);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("null") != std::string::npos);
}
