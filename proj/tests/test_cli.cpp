#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dvnug/cli.hpp"
#include "dvnug/demos.hpp"
#include "dvnug/io.hpp"
#include "test_support.hpp"

using namespace dvnug;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "dvnug_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const Json& doc) {
  const std::string path = (scratch() / name).string();
  write_text_file(path, doc.dump());
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = run({"validate", "example-3.4"});
  CHECK(ok.code == 0);
  CHECK(spec_from_json(Json::parse(ok.out)) == two_tap_frame());

  Json bad = spec_to_json(two_tap_frame());
  bad["r"] = 2;
  const Run even = run({"validate", write("even.json", bad)});
  CHECK(even.code == 1);
  CHECK(even.err.find("NonOdd") != std::string::npos);

  bad = spec_to_json(two_tap_frame());
  bad["windows"][3][1]["value"].erase(0);
  const Run short_value = run({"validate", write("short.json", bad)});
  CHECK(short_value.code == 1);
  CHECK(short_value.err.find("windows[3][1].value") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"bounds"}).code == 1);
  CHECK(run({"demo", "unknown"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bounds reports") {
  const Run r = run({"bounds", "example-3.4"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["command"] == "bounds");
  CHECK(doc["grid"] == 256);
  CHECK(doc["results"]["verdict"] == "Frame");
  CHECK(std::abs(doc["results"]["A_est"].get<double>() - 4.0) < 1e-9);
  CHECK(std::abs(doc["results"]["B_est"].get<double>() - 4.0) < 1e-9);
  CHECK(std::abs(doc["results"]["bessel_sufficient"].get<double>() - 4096.0) < 0.1);
  CHECK(doc["results"]["stable"] == true);

  const std::string json_path = (scratch() / "report.json").string();
  const std::string csv_path = (scratch() / "trace.csv").string();
  const Run to_file = run({"bounds", "example-3.4", "--grid", "64", "--json", json_path, "--csv", csv_path});
  CHECK(to_file.code == 0);
  CHECK(Json::parse(slurp(json_path))["grid"] == 64);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("xi,sigma_min,sigma_max\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);

  const Run again = run({"bounds", "example-3.4"});
  CHECK(again.out == r.out);

  const LambdaParams params = LambdaParams::validate(1, 1);
  const GaborSpec zero(params, 1, 1, {NuSequence(params, 1)});
  const Run z = run({"bounds", write("zero.json", spec_to_json(zero)), "--grid", "16"});
  CHECK(z.code == 2);
  const Json zd = Json::parse(z.out);
  CHECK(zd["results"]["verdict"] == "NotBessel");
  CHECK(zd["results"]["trivial"] == true);
}

TEST_CASE("analyze, synthesize and reconstruct") {
  std::mt19937_64 rng(89);
  const GaborSpec spec = two_tap_frame();
  const NuSequence z = random_sequence(spec.params(), 2, rng, random_options_for(spec));
  const Run a = run({"analyze", "example-3.4", write("signal.json", signal_to_json(z))});
  REQUIRE(a.code == 0);
  const std::string coeffs = write("coeffs.json", Json::parse(a.out));

  const Run s = run({"synthesize", "example-3.4", coeffs});
  REQUIRE(s.code == 0);
  CHECK(subtract(signal_from_json(Json::parse(s.out)), scale(z, 4.0)).norm() < 1e-9 * z.norm());

  const Run rec = run({"synthesize", "example-3.4", coeffs, "--reconstruct"});
  REQUIRE(rec.code == 0);
  CHECK(subtract(signal_from_json(Json::parse(rec.out)), z).norm() < 1e-8 * z.norm());

  const Run empty = run({"analyze", "example-3.4", write("zero_signal.json", signal_to_json(NuSequence(spec.params(), 2)))});
  CHECK(Json::parse(empty.out)["coefficients"].empty());

  CoefficientMap unit{{CoefficientKey{{1, 0}, 1, 6}, 1.0}};
  const Run one = run({"synthesize", "example-3.4", write("unit.json", coefficients_to_json(unit))});
  CHECK(signal_from_json(Json::parse(one.out)) == frame_element(spec, {1, 0}, 1, 6));
}

TEST_CASE("perturb") {
  const Run r = run({"perturb", "example-3.4", "example-4.2", "--A0", "4", "--B0", "4096"});
  CHECK(r.code == 0);
  const Json res = Json::parse(r.out)["results"];
  CHECK(std::abs(res["theta"].get<double>() - 1.0 / 17.0) < 1e-6);
  CHECK(std::abs(res["condition_value"].get<double>() - 1024.0 / 289.0) < 1e-9);
  CHECK(res["certified"] == true);
  CHECK(res["verification"]["pass"] == true);

  const GaborSpec spec = two_tap_frame();
  std::vector<NuSequence> neg;
  for (const auto& w : spec.windows()) neg.push_back(scale(w, -1.0));
  const std::string negpath = write("neg.json", spec_to_json(GaborSpec(spec.params(), 2, 2, neg)));
  const Run n = run({"perturb", "example-3.4", negpath, "--A0", "4", "--B0", "4096"});
  const Json nres = Json::parse(n.out)["results"];
  CHECK(nres["theta"] == 0.0);
  CHECK(nres["lower"] == 4.0);
  CHECK(n.code == 0);

  const Run same = run({"perturb", "example-3.4", "example-3.4", "--A0", "4", "--B0", "4096"});
  CHECK(same.code == 2);
  CHECK(Json::parse(same.out)["results"]["certified"] == false);

  // Default bounds come from the grid estimates (4, 4).
  const Run d = run({"perturb", "example-3.4", "example-4.2"});
  CHECK(Json::parse(d.out)["results"]["B0"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("reduce") {
  const Run mean = run({"reduce", "example-3.4", "--mode", "mean"});
  CHECK(mean.code == 0);
  const Json m = Json::parse(mean.out)["results"];
  CHECK(m["report"]["verdict"] == "Frame");
  CHECK(std::abs(m["report"]["A_est"].get<double>() - 2.0) < 1e-9);
  CHECK(std::abs(m["report"]["B_est"].get<double>() - 2.0) < 1e-9);
  CHECK(m["derived_config"]["S"] == 1);

  const Run row = run({"reduce", "example-3.4", "--mode", "row:1"});
  CHECK(row.code == 0);
  CHECK(Json::parse(row.out)["results"]["report"]["verdict"] == "Frame");
  CHECK(run({"reduce", "example-3.4", "--mode", "row:3"}).code == 1);
  CHECK(run({"reduce", "example-3.4", "--mode", "row:x"}).code == 1);
  CHECK(run({"reduce", "example-3.4", "--mode", "other"}).code == 1);

  const Run entries = run({"reduce", "example-3.4", "--mode", "entries"});
  CHECK(entries.code == 0);
  const Json e = Json::parse(entries.out)["results"];
  CHECK(e["entry_bounds"].size() == 2);
  CHECK(e["entry_bounds"][0].size() == 8);
  CHECK(e["full_bessel"] == true);
}

TEST_CASE("demos") {
  for (const char* name : {"matrix-identity", "bessel-3.4", "perturb-4.2"}) {
    const Run r = run({"demo", name});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
}
