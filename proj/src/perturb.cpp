#include "dvnug/perturb.hpp"

#include <cmath>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

double compute_theta(const GaborSpec& specW, const std::vector<NuSequence>& V, const XiGrid& grid) {
  if (static_cast<int>(V.size()) != specW.window_count())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(specW.window_count()) +
                                                  " perturbation windows, got " + std::to_string(V.size()));
  std::vector<NuSequence> sums;
  sums.reserve(V.size());
  for (std::size_t j = 0; j < V.size(); ++j) sums.push_back(add(specW.window(static_cast<int>(j)), V[j]));
  return grid_B0(GaborSpec(specW.params(), specW.M(), specW.S(), std::move(sums)), grid);
}

PerturbationReport certify(double theta, double A0, double B0, int M, int P, int S) {
  if (!(A0 > 0.0)) throw Error(ErrorCode::InvalidBounds, "A0 must be positive, got " + std::to_string(A0));
  if (!(B0 >= A0))
    throw Error(ErrorCode::InvalidBounds, "B0 = " + std::to_string(B0) + " is below A0 = " + std::to_string(A0));
  if (!(theta >= 0.0)) throw Error(ErrorCode::InvalidBounds, "theta must be nonnegative, got " + std::to_string(theta));
  PerturbationReport report;
  report.theta = theta;
  report.A0 = A0;
  report.B0 = B0;
  report.condition_value = std::ldexp(theta * theta * S, M + P);
  report.certified = report.condition_value < A0;
  report.chain_holds = theta < report.condition_value && report.certified;
  if (report.certified) {
    const double gap = std::sqrt(A0) - std::sqrt(report.condition_value);
    report.lower = gap * gap;
  }
  report.upper = 2.0 * report.condition_value + 2.0 * B0;
  return report;
}

PerturbationReport perturbation_report(const GaborSpec& specW, const std::vector<NuSequence>& V, double A0, double B0,
                                       int Q) {
  const double theta = compute_theta(specW, V, make_grid(specW.params(), Q));
  PerturbationReport report = certify(theta, A0, B0, specW.M(), specW.P(), specW.S());
  report.Q = Q;
  report.theta_refined = compute_theta(specW, V, make_grid(specW.params(), 2 * Q));
  report.certified_refined = certify(report.theta_refined, A0, B0, specW.M(), specW.P(), specW.S()).certified;
  return report;
}

PerturbedCheck verify_perturbed(const GaborSpec& specV, const PerturbationReport& report, int trials,
                                std::uint64_t seed, double tol) {
  if (!report.certified)
    throw Error(ErrorCode::Precondition, "perturbation is not certified; no bounds to verify against");
  const FrameRatio ratio = empirical_frame_ratio(specV, trials, seed);
  return {ratio.min_ratio >= report.lower - tol && ratio.max_ratio <= report.upper + tol, ratio.min_ratio,
          ratio.max_ratio};
}

}  // namespace dvnug
