#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dvnug/demos.hpp"
#include "dvnug/error.hpp"
#include "dvnug/io.hpp"
#include "test_support.hpp"

using namespace dvnug;

namespace {

Error parse_failure(const Json& config) {
  try {
    spec_from_json(config);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::Parse, "");
}

Json small_config() {
  return Json::parse(R"({"N": 2, "r": 1, "M": 1, "P": 0, "S": 2,
                         "windows": [[{"n": 0, "eps": 1, "value": [[1, 0], [0, -1]]}]]})");
}

}  // namespace

TEST_CASE("configs round-trip through canonical JSON") {
  for (const GaborSpec& spec : {two_tap_frame(), two_tap_perturbation()}) {
    const Json once = spec_to_json(spec);
    const GaborSpec back = spec_from_json(once);
    CHECK(back == spec);
    CHECK(spec_to_json(back).dump() == once.dump());
  }
  const GaborSpec s = spec_from_json(small_config());
  CHECK(s.S() == 2);
  CHECK(s.window(0)({0, 1})(1) == Complex(0, -1));
}

TEST_CASE("config errors name the field") {
  Json bad = small_config();
  bad["r"] = 2;
  CHECK(parse_failure(bad).code() == ErrorCode::NonOdd);

  bad = small_config();
  bad["windows"][0][0]["value"] = Json::parse("[[1, 0]]");
  Error e = parse_failure(bad);
  CHECK(e.code() == ErrorCode::Parse);
  CHECK(std::string(e.what()).find("windows[0][0].value") != std::string::npos);

  bad = small_config();
  bad["windows"][0][0]["value"][1] = Json::parse("[1]");
  CHECK(std::string(parse_failure(bad).what()).find("windows[0][0].value[1]") != std::string::npos);

  bad = small_config();
  bad.erase("M");
  CHECK(std::string(parse_failure(bad).what()).find("M") != std::string::npos);

  bad = small_config();
  bad["P"] = 1;
  CHECK(std::string(parse_failure(bad).what()).find("windows") != std::string::npos);

  bad = small_config();
  bad["windows"][0][0]["eps"] = 2;
  CHECK(std::string(parse_failure(bad).what()).find("windows[0][0].eps") != std::string::npos);

  bad = small_config();
  bad["N"] = 1.5;
  CHECK(parse_failure(bad).code() == ErrorCode::Parse);

  bad = small_config();
  bad["windows"][0].push_back(bad["windows"][0][0]);
  CHECK(std::string(parse_failure(bad).what()).find("duplicate") != std::string::npos);
}

TEST_CASE("signals and coefficients round-trip") {
  std::mt19937_64 rng(83);
  const GaborSpec spec = two_tap_frame();
  const NuSequence z = random_sequence(spec.params(), 2, rng, random_options_for(spec));
  CHECK(signal_from_json(Json::parse(signal_to_json(z).dump())) == z);
  const CoefficientMap c = analysis(spec, z);
  CHECK(coefficients_from_json(Json::parse(coefficients_to_json(c).dump())) == c);
  CHECK(coefficients_to_json({})["coefficients"].empty());
}

TEST_CASE("digest and CSV") {
  CHECK(config_digest(two_tap_frame()) == config_digest(two_tap_frame()));
  CHECK(config_digest(two_tap_frame()) != config_digest(two_tap_perturbation()));
  CHECK(config_digest(two_tap_frame()).size() == 16);
  std::ostringstream csv;
  write_trace_csv(csv, {{0.1, 1.0, 2.0}, {0.2, 1.5, 2.5}});
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "xi,sigma_min,sigma_max");
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("built-in names and files") {
  CHECK(load_spec("example-3.4") == two_tap_frame());
  CHECK(load_spec("example-4.2") == two_tap_perturbation());
  CHECK_THROWS_AS(load_spec("/nonexistent/config.json"), Error);
}
