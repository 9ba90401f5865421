#include "dvnug/demos.hpp"

namespace dvnug {

namespace {

const LambdaParams& two_tap_params() {
  static const LambdaParams params = LambdaParams::validate(2, 1);
  return params;
}

// Two taps at lambda = 2*n0 + eps*r/N and lambda + 4, in coordinate k.
NuSequence two_tap(int eps, int k, double first, double second) {
  NuSequence w(two_tap_params(), 2);
  CVector a = CVector::Zero(2), b = CVector::Zero(2);
  a(k) = first;
  b(k) = second;
  w.set(LambdaPoint{0, eps}, a);
  w.set(LambdaPoint{2, eps}, b);
  return w;
}

}  // namespace

GaborSpec two_tap_frame() {
  std::vector<NuSequence> windows;
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 0; k < 2; ++k) {
      windows.push_back(two_tap(eps, k, 1.0, 1.0));
      windows.push_back(two_tap(eps, k, 1.0, -1.0));
    }
  return GaborSpec(two_tap_params(), 2, 2, std::move(windows));
}

std::vector<NuSequence> two_tap_perturbation_windows() {
  std::vector<NuSequence> windows;
  for (int k = 0; k < 2; ++k) {
    windows.push_back(two_tap(0, k, -16.0 / 17.0, -1.0));
    windows.push_back(two_tap(0, k, -16.0 / 17.0, 1.0));
  }
  for (int k = 0; k < 2; ++k) {
    windows.push_back(two_tap(1, k, -1.0, -1.0));
    windows.push_back(two_tap(1, k, -1.0, 1.0));
  }
  return windows;
}

GaborSpec two_tap_perturbation() { return GaborSpec(two_tap_params(), 2, 2, two_tap_perturbation_windows()); }

std::optional<GaborSpec> builtin_config(const std::string& name) {
  if (name == "example-3.4") return two_tap_frame();
  if (name == "example-4.2") return two_tap_perturbation();
  return std::nullopt;
}

std::vector<std::string> builtin_config_names() { return {"example-3.4", "example-4.2"}; }

}  // namespace dvnug
