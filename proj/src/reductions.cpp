#include "dvnug/reductions.hpp"

#include <cmath>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

GaborSpec mean_system(const GaborSpec& spec) {
  std::vector<NuSequence> windows;
  for (const NuSequence& w : spec.windows()) windows.push_back(arithmetic_mean(w));
  return GaborSpec(spec.params(), spec.M(), 1, std::move(windows));
}

GaborSpec row_system(const GaborSpec& spec, int l0) {
  if (l0 < 0 || l0 >= spec.S())
    throw Error(ErrorCode::OutOfRange, "row " + std::to_string(l0) + " outside [0, " + std::to_string(spec.S()) + ")");
  std::vector<NuSequence> windows;
  for (const NuSequence& w : spec.windows()) windows.push_back(coordinate(w, l0));
  return GaborSpec(spec.params(), spec.M(), 1, std::move(windows));
}

Counterexample converse_counterexample(const GaborSpec& scalar_spec, const NuSequence& z) {
  if (scalar_spec.S() != 1)
    throw Error(ErrorCode::DimensionMismatch, "expected a scalar system, got S = " + std::to_string(scalar_spec.S()));
  if (!(z.params() == scalar_spec.params()) || z.dim() != 1)
    throw Error(ErrorCode::DimensionMismatch, "witness seed must be a scalar sequence on the same Lambda");
  if (z.empty()) throw Error(ErrorCode::Precondition, "witness seed must be nonzero");
  std::vector<NuSequence> windows;
  for (const NuSequence& w : scalar_spec.windows()) windows.push_back(constant_lift(w, 3));
  NuSequence witness = subtract(coordinate_lift(z, 3, 0), coordinate_lift(z, 3, 1));
  return {GaborSpec(scalar_spec.params(), scalar_spec.M(), 3, std::move(windows)), std::move(witness)};
}

Counterexample converse_counterexample(const GaborSpec& scalar_spec) {
  return converse_counterexample(scalar_spec, NuSequence::delta(scalar_spec.params(), 1, LambdaPoint{0, 0}));
}

std::map<LambdaPoint, CMatrix> window_matrix(const GaborSpec& spec) {
  std::map<LambdaPoint, CMatrix> out;
  for (int j = 0; j < spec.window_count(); ++j)
    for (const auto& [p, v] : spec.window(j).entries()) {
      auto [it, inserted] = out.try_emplace(p, CMatrix::Zero(spec.S(), spec.window_count()));
      it->second.col(j) = v;
    }
  return out;
}

EntryBesselReport entry_bessel_report(const GaborSpec& spec, const XiGrid& grid) {
  EntryBesselReport report;
  report.entry_bounds = Eigen::MatrixXd::Zero(spec.S(), spec.window_count());
  for (int l = 0; l < spec.S(); ++l)
    for (int j = 0; j < spec.window_count(); ++j) {
      const GaborSpec entry(spec.params(), spec.M(), 1, {coordinate(spec.window(j), l)});
      const double bound = frame_bounds_grid(entry, grid).B_est;
      report.entry_bounds(l, j) = bound;
      report.all_entries_bessel = report.all_entries_bessel && std::isfinite(bound);
    }
  report.beta0 = report.entry_bounds.size() > 0 ? report.entry_bounds.maxCoeff() : 0.0;
  report.aggregate = std::ldexp(report.beta0 * spec.window_count(), spec.S() - 1);
  report.full_bessel = report.all_entries_bessel && std::isfinite(report.aggregate);
  return report;
}

}  // namespace dvnug
