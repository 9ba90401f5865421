#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dvnug/gabor.hpp"
#include "dvnug/lambda.hpp"
#include "dvnug/transform.hpp"

namespace dvnug {

/// F(E_{m/M} W_j) for every m and j, computed once per system.
class TransformTable {
 public:
  explicit TransformTable(const GaborSpec& spec);

  const LaurentVector& operator()(int m, int j) const {
    return table_[static_cast<std::size_t>(m * window_count_ + j)];
  }
  int M() const { return M_; }
  int window_count() const { return window_count_; }

 private:
  int M_;
  int window_count_;
  std::vector<LaurentVector> table_;
};

/// 4N x 2(P+1) matrix of translate samples for modulation m and coordinate k.
/// Column 2j holds [F(E_{m/M} W_j)]_k at the translate rows of the grid, column
/// 2j+1 the same samples times e^{4 pi i r (xi + t/4N)}. Indices are 0-based.
struct CharMatrix {
  int m = 0;
  int k = 0;
  double xi = 0.0;
  CMatrix entries;
};

/// Requires 0 <= m < M, 0 <= k < S and xi in [0, 1/4N).
CharMatrix build_char_matrix(const GaborSpec& spec, int m, int k, double xi);
CharMatrix build_char_matrix(const GaborSpec& spec, const TransformTable& table, int m, int k, double xi);

/// (M * 2(P+1)) x (4N * S) operator whose (m, k) block is the conjugate
/// transpose of the characteristic matrix.
CMatrix stacked_operator(const GaborSpec& spec, const TransformTable& table, double xi);

/// Largest ||F(E_{m/M} W_j)(xi)|| over m, j and every translate grid point.
double grid_B0(const GaborSpec& spec, const XiGrid& grid);

/// 2^{M+P} B0^2 S.
double bessel_sufficient_bound(const GaborSpec& spec, double B0);

struct NecessaryCheck {
  double B_bessel = 0.0;
  double B0_grid = 0.0;
  double threshold = 0.0;  // 2 sqrt(N B_bessel)
  bool pass = true;
};

/// A failed check proves B_bessel is not a Bessel bound. Throws Precondition
/// unless B_bessel > 0.
NecessaryCheck bessel_necessary_check(const GaborSpec& spec, double B_bessel, const XiGrid& grid);

/// sum_m int_0^{1/4N} ||sum_k M*_{m,k}(xi) V_k(xi)||^2 dxi / 4N, integrated in
/// closed form. V_k stacks F(Z_k) at the translate points. Equal to energy(Z).
double matrix_energy_rhs(const GaborSpec& spec, const NuSequence& z);

struct SingularTrace {
  double xi = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

struct GridBounds {
  double A_est = 0.0;
  double B_est = 0.0;
  std::vector<SingularTrace> trace;
};

/// A_est = min sigma_min^2 / 4N and B_est = max sigma_max^2 / 4N over the
/// base points. sigma_min is taken on the domain side, so it is 0 whenever
/// the operator has fewer rows than columns.
GridBounds frame_bounds_grid(const GaborSpec& spec, const XiGrid& grid);

enum class Verdict { Frame, BesselOnly, NotBessel, Inconclusive };

std::string to_string(Verdict v);

struct ReportOptions {
  int Q = 256;
  double tol = 1e-9;
  int trials = 100;
  std::uint64_t seed = 0;
};

struct FrameReport {
  Verdict verdict = Verdict::Inconclusive;
  /// All windows vanish, so the system is the zero family.
  bool trivial = false;
  int Q = 0;
  double tol = 0.0;
  double A_est = 0.0;
  double B_est = 0.0;
  double A_est_refined = 0.0;  // at 2Q
  double B_est_refined = 0.0;
  bool stable = false;
  double B0_grid = 0.0;
  double bessel_sufficient = 0.0;
  NecessaryCheck necessary;
  int trials = 0;
  std::uint64_t seed = 0;
  double empirical_min = 0.0;
  double empirical_max = 0.0;
  /// empirical_min >= A_est - tol and empirical_max <= B_est + tol.
  bool sandwich_ok = false;
  std::vector<std::string> caveats;
  std::vector<SingularTrace> trace;
};

FrameReport full_report(const GaborSpec& spec, const ReportOptions& options = {});

}  // namespace dvnug
