#pragma once

#include <cstdint>
#include <vector>

#include "dvnug/bounds.hpp"
#include "dvnug/gabor.hpp"

namespace dvnug {

struct PerturbationReport {
  double theta = 0.0;
  double A0 = 0.0;
  double B0 = 0.0;
  /// 2^{M+P} theta^2 S
  double condition_value = 0.0;
  /// condition_value < A0
  bool certified = false;
  /// theta < condition_value, the left half of the stated chain. Reported only.
  bool chain_holds = false;
  /// (sqrt(A0) - sqrt(condition_value))^2 when certified, otherwise 0.
  double lower = 0.0;
  /// 2 condition_value + 2 B0
  double upper = 0.0;
  int Q = 0;
  double theta_refined = 0.0;  // at 2Q
  bool certified_refined = false;
};

/// Grid estimate of sup ||F(E_{m/M}(W_j + V_j))(xi)||. It never exceeds the
/// essential supremum.
double compute_theta(const GaborSpec& specW, const std::vector<NuSequence>& V, const XiGrid& grid);

/// Throws InvalidBounds unless A0 > 0, B0 >= A0 and theta >= 0.
PerturbationReport certify(double theta, double A0, double B0, int M, int P, int S);

/// compute_theta at Q and 2Q followed by certify.
PerturbationReport perturbation_report(const GaborSpec& specW, const std::vector<NuSequence>& V, double A0, double B0,
                                       int Q = 256);

struct PerturbedCheck {
  bool pass = false;
  double empirical_min = 0.0;
  double empirical_max = 0.0;
};

/// Empirical energy ratios of specV against [lower - tol, upper + tol].
/// Throws Precondition when the report is not certified.
PerturbedCheck verify_perturbed(const GaborSpec& specV, const PerturbationReport& report, int trials,
                                std::uint64_t seed, double tol = 1e-9);

}  // namespace dvnug
