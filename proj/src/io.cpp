#include "dvnug/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dvnug/demos.hpp"
#include "dvnug/error.hpp"

namespace dvnug {

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, path + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) parse_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(path + "." + key, "missing");
  return *it;
}

std::int64_t integer(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) parse_error(path, "expected an integer");
  return value.get<std::int64_t>();
}

int small_integer(const Json& value, const std::string& path) {
  const std::int64_t v = integer(value, path);
  if (v < -(1LL << 30) || v > (1LL << 30)) parse_error(path, "integer out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& value, const std::string& path) {
  if (!value.is_array()) parse_error(path, "expected an array");
  return value;
}

Complex complex_value(const Json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
    parse_error(path, "expected a complex number [re, im]");
  return {value[0].get<double>(), value[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

LambdaParams params_from_json(const Json& doc) {
  return LambdaParams::validate(integer(field(doc, "N", ""), "N"), integer(field(doc, "r", ""), "r"));
}

}  // namespace

NuSequence sequence_from_json(const Json& support, const LambdaParams& params, int dim, const std::string& path) {
  NuSequence z(params, dim);
  const Json& entries = array(support, path);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = indexed(path, i);
    const Json& entry = entries[i];
    const std::int64_t n = integer(field(entry, "n", at), at + ".n");
    const std::int64_t eps = integer(field(entry, "eps", at), at + ".eps");
    if (eps != 0 && eps != 1) parse_error(at + ".eps", "must be 0 or 1");
    const Json& value = array(field(entry, "value", at), at + ".value");
    if (static_cast<int>(value.size()) != dim)
      parse_error(at + ".value", "expected " + std::to_string(dim) + " components, got " + std::to_string(value.size()));
    CVector v(dim);
    for (int k = 0; k < dim; ++k) v(k) = complex_value(value[k], indexed(at + ".value", static_cast<std::size_t>(k)));
    const LambdaPoint point{n, static_cast<int>(eps)};
    if (z.find(point) != nullptr) parse_error(at, "duplicate support point");
    z.set(point, v);
  }
  return z;
}

Json sequence_to_json(const NuSequence& z) {
  Json support = Json::array();
  for (const auto& [p, v] : z.entries()) {
    Json value = Json::array();
    for (int k = 0; k < z.dim(); ++k) value.push_back(complex_to_json(v(k)));
    support.push_back(Json{{"n", p.n}, {"eps", p.eps}, {"value", value}});
  }
  return support;
}

GaborSpec spec_from_json(const Json& config) {
  if (!config.is_object()) parse_error("config", "expected an object");
  const LambdaParams params = params_from_json(config);
  const int M = small_integer(field(config, "M", ""), "M");
  const int P = small_integer(field(config, "P", ""), "P");
  const int S = small_integer(field(config, "S", ""), "S");
  if (M < 1) throw Error(ErrorCode::NonPositive, "M: must be >= 1");
  if (P < 0) throw Error(ErrorCode::NonPositive, "P: must be >= 0");
  if (S < 1) throw Error(ErrorCode::NonPositive, "S: must be >= 1");
  const Json& windows = array(field(config, "windows", ""), "windows");
  if (static_cast<int>(windows.size()) != P + 1)
    parse_error("windows", "expected P+1 = " + std::to_string(P + 1) + " windows, got " + std::to_string(windows.size()));
  std::vector<NuSequence> seqs;
  for (std::size_t j = 0; j < windows.size(); ++j)
    seqs.push_back(sequence_from_json(windows[j], params, S, indexed("windows", j)));
  return GaborSpec(params, M, S, std::move(seqs));
}

Json spec_to_json(const GaborSpec& spec) {
  Json windows = Json::array();
  for (const NuSequence& w : spec.windows()) windows.push_back(sequence_to_json(w));
  return Json{{"N", spec.params().N()}, {"r", spec.params().r()}, {"M", spec.M()},
              {"P", spec.P()},           {"S", spec.S()},           {"windows", windows}};
}

NuSequence signal_from_json(const Json& signal) {
  if (!signal.is_object()) parse_error("signal", "expected an object");
  const LambdaParams params = params_from_json(signal);
  const int S = small_integer(field(signal, "S", ""), "S");
  if (S < 1) throw Error(ErrorCode::NonPositive, "S: must be >= 1");
  return sequence_from_json(field(signal, "support", ""), params, S, "support");
}

Json signal_to_json(const NuSequence& z) {
  return Json{{"N", z.params().N()}, {"r", z.params().r()}, {"S", z.dim()}, {"support", sequence_to_json(z)}};
}

CoefficientMap coefficients_from_json(const Json& doc) {
  const Json& list = array(field(doc, "coefficients", ""), "coefficients");
  CoefficientMap out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = indexed("coefficients", i);
    const Json& e = list[i];
    const std::int64_t eps = integer(field(e, "eps", at), at + ".eps");
    if (eps != 0 && eps != 1) parse_error(at + ".eps", "must be 0 or 1");
    const CoefficientKey key{LambdaPoint{integer(field(e, "n", at), at + ".n"), static_cast<int>(eps)},
                             small_integer(field(e, "m", at), at + ".m"), small_integer(field(e, "j", at), at + ".j")};
    const Complex value = complex_value(field(e, "value", at), at + ".value");
    if (!out.emplace(key, value).second) parse_error(at, "duplicate coefficient index");
  }
  return out;
}

Json coefficients_to_json(const CoefficientMap& c) {
  Json list = Json::array();
  for (const auto& [key, value] : c)
    list.push_back(Json{{"n", key.lambda.n}, {"eps", key.lambda.eps}, {"m", key.m}, {"j", key.j},
                        {"value", complex_to_json(value)}});
  return Json{{"coefficients", list}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, path + ": cannot write file");
  out << text;
}

GaborSpec load_spec(const std::string& name_or_path) {
  if (auto builtin = builtin_config(name_or_path)) return *builtin;
  return spec_from_json(read_json_file(name_or_path));
}

std::string config_digest(const GaborSpec& spec) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : spec_to_json(spec).dump()) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

Json frame_report_to_json(const FrameReport& r) {
  Json caveats = Json::array();
  for (const auto& c : r.caveats) caveats.push_back(c);
  return Json{{"verdict", to_string(r.verdict)},
              {"trivial", r.trivial},
              {"A_est", r.A_est},
              {"B_est", r.B_est},
              {"A_est_refined", r.A_est_refined},
              {"B_est_refined", r.B_est_refined},
              {"refined_grid", 2 * r.Q},
              {"stable", r.stable},
              {"B0_grid", r.B0_grid},
              {"bessel_sufficient", r.bessel_sufficient},
              {"necessary_check",
               {{"B_bessel", r.necessary.B_bessel}, {"threshold", r.necessary.threshold}, {"pass", r.necessary.pass}}},
              {"empirical_min", r.empirical_min},
              {"empirical_max", r.empirical_max},
              {"sandwich_ok", r.sandwich_ok},
              {"caveats", caveats}};
}

Json perturbation_report_to_json(const PerturbationReport& r) {
  return Json{{"theta", r.theta},
              {"theta_refined", r.theta_refined},
              {"A0", r.A0},
              {"B0", r.B0},
              {"condition_value", r.condition_value},
              {"certified", r.certified},
              {"certified_refined", r.certified_refined},
              {"chain_holds", r.chain_holds},
              {"lower", r.lower},
              {"upper", r.upper}};
}

void write_trace_csv(std::ostream& out, const std::vector<SingularTrace>& trace) {
  out << "xi,sigma_min,sigma_max\n";
  out << std::setprecision(17);
  for (const auto& row : trace) out << row.xi << ',' << row.sigma_min << ',' << row.sigma_max << '\n';
}

}  // namespace dvnug
