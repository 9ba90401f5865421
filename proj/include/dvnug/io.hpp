#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dvnug/bounds.hpp"
#include "dvnug/gabor.hpp"
#include "dvnug/perturb.hpp"

namespace dvnug {

using Json = nlohmann::ordered_json;

/// {N, r, M, P, S, windows: [[{n, eps, value: [[re, im], ...]}, ...], ...]}.
/// Parse errors name the offending field, e.g. "windows[2][0].value".
GaborSpec spec_from_json(const Json& config);
Json spec_to_json(const GaborSpec& spec);

/// Support entries [{n, eps, value}, ...] of one sequence.
NuSequence sequence_from_json(const Json& support, const LambdaParams& params, int dim, const std::string& path);
Json sequence_to_json(const NuSequence& z);

/// {N, r, S, support: [...]}
NuSequence signal_from_json(const Json& signal);
Json signal_to_json(const NuSequence& z);

/// {coefficients: [{n, eps, m, j, value: [re, im]}, ...]}
CoefficientMap coefficients_from_json(const Json& doc);
Json coefficients_to_json(const CoefficientMap& c);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// A built-in configuration name or a path to a JSON config file.
GaborSpec load_spec(const std::string& name_or_path);

/// FNV-1a 64-bit hash of the canonical config serialization, as 16 hex digits.
std::string config_digest(const GaborSpec& spec);

Json frame_report_to_json(const FrameReport& report);
Json perturbation_report_to_json(const PerturbationReport& report);

/// Header xi,sigma_min,sigma_max and one row per base point.
void write_trace_csv(std::ostream& out, const std::vector<SingularTrace>& trace);

}  // namespace dvnug
