#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dvnug/gabor.hpp"

namespace dvnug {

/// N = 2, r = 1, S = 2, M = 2, eight two-tap windows supported on {0, 4} and
/// {1/2, 9/2}. A tight frame with bound 4.
GaborSpec two_tap_frame();

/// Perturbation windows V_j for two_tap_frame(): W_j + V_j is the constant
/// +-1/17 in one coordinate for j <= 3 and zero for j >= 4.
std::vector<NuSequence> two_tap_perturbation_windows();

/// The system generated by two_tap_perturbation_windows().
GaborSpec two_tap_perturbation();

/// Built-in configurations by CLI name ("example-3.4", "example-4.2").
std::optional<GaborSpec> builtin_config(const std::string& name);
std::vector<std::string> builtin_config_names();

}  // namespace dvnug
