#pragma once

#include <map>

#include "dvnug/bounds.hpp"
#include "dvnug/gabor.hpp"

namespace dvnug {

/// Scalar system whose windows are the coordinate means of the windows of `spec`.
GaborSpec mean_system(const GaborSpec& spec);

/// Scalar system generated by coordinate l0 (0-based) of every window.
GaborSpec row_system(const GaborSpec& spec, int l0);

struct Counterexample {
  GaborSpec spec;      // S = 3, every window [w; w; w]
  NuSequence witness;  // [z; -z; 0]
};

/// Three-coordinate system with duplicated windows. Each row system is the
/// input, yet the witness has zero energy. Requires S = 1 and z nonzero.
Counterexample converse_counterexample(const GaborSpec& scalar_spec, const NuSequence& z);
Counterexample converse_counterexample(const GaborSpec& scalar_spec);

/// S x (P+1) matrix per point of the union of window supports; entry (l, j)
/// is [W_j(lambda)]_l.
std::map<LambdaPoint, CMatrix> window_matrix(const GaborSpec& spec);

struct EntryBesselReport {
  /// B_est of the scalar single-window system generated by [W_j]_l, as an
  /// S x (P+1) table.
  Eigen::MatrixXd entry_bounds;
  double beta0 = 0.0;
  /// beta0 * 2^{S-1} * (P+1), a Bessel bound of the full system.
  double aggregate = 0.0;
  bool all_entries_bessel = true;
  bool full_bessel = true;
};

EntryBesselReport entry_bessel_report(const GaborSpec& spec, const XiGrid& grid);

}  // namespace dvnug
