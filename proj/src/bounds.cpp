#include "dvnug/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "dvnug/error.hpp"

namespace dvnug {

TransformTable::TransformTable(const GaborSpec& spec) : M_(spec.M()), window_count_(spec.window_count()) {
  table_.reserve(static_cast<std::size_t>(M_ * window_count_));
  for (int m = 0; m < M_; ++m)
    for (int j = 0; j < window_count_; ++j) table_.push_back(modulated_transform(spec.window(j), m, M_));
}

namespace {

// e^{4 pi i r (xi + t/4N)} = e^{2 pi i (2 r xi)} e^{2 pi i r t / 2N}
Complex b_column_phase(const LambdaParams& params, double xi, int t) {
  return turns_phase(2.0 * params.r() * xi) * unit_phase(static_cast<std::int64_t>(params.r()) * t, params.period());
}

void fill_char_matrix(const GaborSpec& spec, const TransformTable& table, int m, int k, double xi, CMatrix& out) {
  const LambdaParams& params = spec.params();
  const int rows = 4 * params.N();
  const int two_n = 2 * params.N();
  out.resize(rows, 2 * spec.window_count());
  // The grid object only supplies exact row offsets; the base point is xi itself.
  const XiGrid offsets(params, 1);
  for (int row = 0; row < rows; ++row) {
    const Rational offset = offsets.offset(row);
    const Complex phase = b_column_phase(params, xi, row % two_n);
    for (int j = 0; j < spec.window_count(); ++j) {
      const Complex a = table(m, j).components[static_cast<std::size_t>(k)].evaluate_translate(xi, offset);
      out(row, 2 * j) = a;
      out(row, 2 * j + 1) = a * phase;
    }
  }
}

}  // namespace

CharMatrix build_char_matrix(const GaborSpec& spec, const TransformTable& table, int m, int k, double xi) {
  if (m < 0 || m >= spec.M())
    throw Error(ErrorCode::OutOfRange, "m = " + std::to_string(m) + " outside [0, " + std::to_string(spec.M()) + ")");
  if (k < 0 || k >= spec.S())
    throw Error(ErrorCode::OutOfRange, "k = " + std::to_string(k) + " outside [0, " + std::to_string(spec.S()) + ")");
  const double cell = 1.0 / (4.0 * spec.params().N());
  if (!(xi >= 0.0 && xi < cell))
    throw Error(ErrorCode::OutOfRange, "xi = " + std::to_string(xi) + " outside [0, 1/4N)");
  CharMatrix out{m, k, xi, {}};
  fill_char_matrix(spec, table, m, k, xi, out.entries);
  return out;
}

CharMatrix build_char_matrix(const GaborSpec& spec, int m, int k, double xi) {
  return build_char_matrix(spec, TransformTable(spec), m, k, xi);
}

CMatrix stacked_operator(const GaborSpec& spec, const TransformTable& table, double xi) {
  const int block_rows = 2 * spec.window_count();
  const int block_cols = 4 * spec.params().N();
  CMatrix t(spec.M() * block_rows, spec.S() * block_cols);
  CMatrix block;
  for (int m = 0; m < spec.M(); ++m)
    for (int k = 0; k < spec.S(); ++k) {
      fill_char_matrix(spec, table, m, k, xi, block);
      t.block(m * block_rows, k * block_cols, block_rows, block_cols) = block.adjoint();
    }
  return t;
}

double grid_B0(const GaborSpec& spec, const XiGrid& grid) {
  const TransformTable table(spec);
  double best = 0.0;
  for (int m = 0; m < spec.M(); ++m)
    for (int j = 0; j < spec.window_count(); ++j) best = std::max(best, sup_norm_on_grid(table(m, j), grid));
  return best;
}

double bessel_sufficient_bound(const GaborSpec& spec, double B0) {
  return std::ldexp(B0 * B0 * spec.S(), spec.M() + spec.P());
}

NecessaryCheck bessel_necessary_check(const GaborSpec& spec, double B_bessel, const XiGrid& grid) {
  if (!(B_bessel > 0.0))
    throw Error(ErrorCode::Precondition, "Bessel bound must be positive, got " + std::to_string(B_bessel));
  NecessaryCheck check;
  check.B_bessel = B_bessel;
  check.B0_grid = grid_B0(spec, grid);
  check.threshold = 2.0 * std::sqrt(spec.params().N() * B_bessel);
  check.pass = check.B0_grid <= check.threshold;
  return check;
}

double matrix_energy_rhs(const GaborSpec& spec, const NuSequence& z) {
  if (!(z.params() == spec.params()) || z.dim() != spec.S())
    throw Error(ErrorCode::DimensionMismatch, "signal does not match the system's (N, r, S)");
  const LambdaParams& params = spec.params();
  const int N = params.N();
  const LaurentVector fz = forward(z);
  const TransformTable table(spec);
  const Interval cell{{0, 1}, {1, 4 * static_cast<std::int64_t>(N)}};

  double total = 0.0;
  for (int m = 0; m < spec.M(); ++m)
    for (int j = 0; j < spec.window_count(); ++j) {
      const LaurentVector& g = table(m, j);
      Laurent x(N);
      for (int k = 0; k < spec.S(); ++k) x += fz.components[k] * g.components[k].conj();
      // Both half-blocks of Omega contribute to every row pair.
      const Laurent y = x + x.translated(Rational{N, 2});
      Laurent a_part(N), b_part(N);
      for (int t = 0; t < 2 * N; ++t) {
        const Laurent shifted = y.translated(Rational{t, 4 * static_cast<std::int64_t>(N)});
        a_part += shifted;
        b_part += shifted * unit_phase(-static_cast<std::int64_t>(params.r()) * t, params.period());
      }
      total += (a_part * a_part.conj()).integrate(cell).real();
      total += (b_part * b_part.conj()).integrate(cell).real();
    }
  return total / (4.0 * N);
}

GridBounds frame_bounds_grid(const GaborSpec& spec, const XiGrid& grid) {
  if (!(grid.params() == spec.params()))
    throw Error(ErrorCode::DimensionMismatch, "grid was built for different (N, r)");
  const TransformTable table(spec);
  const double scale = 4.0 * spec.params().N();
  GridBounds out;
  out.A_est = std::numeric_limits<double>::infinity();
  out.trace.reserve(grid.base().size());
  for (double xi : grid.base()) {
    const CMatrix t = stacked_operator(spec, table, xi);
    Eigen::JacobiSVD<CMatrix> svd(t);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double sigma_min = t.rows() < t.cols() ? 0.0 : sv(sv.size() - 1);
    out.trace.push_back({xi, sigma_min, sigma_max});
    out.A_est = std::min(out.A_est, sigma_min * sigma_min / scale);
    out.B_est = std::max(out.B_est, sigma_max * sigma_max / scale);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Frame: return "Frame";
    case Verdict::BesselOnly: return "BesselOnly";
    case Verdict::NotBessel: return "NotBessel";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

// A finitely supported window family always has a bounded transform, so the
// only non-Bessel case is the zero family.
Verdict classify(bool trivial, double A_est, double tol) {
  if (trivial) return Verdict::NotBessel;
  return A_est > tol ? Verdict::Frame : Verdict::BesselOnly;
}

}  // namespace

FrameReport full_report(const GaborSpec& spec, const ReportOptions& options) {
  FrameReport report;
  report.Q = options.Q;
  report.tol = options.tol;
  report.trials = options.trials;
  report.seed = options.seed;
  report.trivial = spec.all_windows_zero();

  const XiGrid grid = make_grid(spec.params(), options.Q);
  const XiGrid refined = make_grid(spec.params(), 2 * options.Q);
  GridBounds coarse = frame_bounds_grid(spec, grid);
  const GridBounds fine = frame_bounds_grid(spec, refined);
  report.A_est = coarse.A_est;
  report.B_est = coarse.B_est;
  report.A_est_refined = fine.A_est;
  report.B_est_refined = fine.B_est;
  report.trace = std::move(coarse.trace);

  const Verdict at_q = classify(report.trivial, report.A_est, options.tol);
  const Verdict at_2q = classify(report.trivial, report.A_est_refined, options.tol);
  report.stable = at_q == at_2q;
  report.verdict = report.stable ? at_q : Verdict::Inconclusive;

  report.B0_grid = grid_B0(spec, grid);
  report.bessel_sufficient = bessel_sufficient_bound(spec, report.B0_grid);
  if (report.B_est > 0.0) {
    report.necessary = bessel_necessary_check(spec, report.B_est, grid);
  } else {
    report.necessary.B0_grid = report.B0_grid;
  }

  const FrameRatio ratio = empirical_frame_ratio(spec, options.trials, options.seed);
  report.empirical_min = ratio.min_ratio;
  report.empirical_max = ratio.max_ratio;
  report.sandwich_ok =
      ratio.min_ratio >= report.A_est - options.tol && ratio.max_ratio <= report.B_est + options.tol;

  report.caveats.push_back("A_est and B_est are grid estimates at Q base points; A_est may exceed the true "
                           "essential infimum and B_est may fall below the true essential supremum");
  report.caveats.push_back("B_est uses the largest singular value, which follows from the energy identity "
                           "rather than from a stated upper-bound characterization");
  report.caveats.push_back("B0_grid is a lower estimate of the essential supremum of the window transforms");
  if (!report.sandwich_ok)
    report.caveats.push_back("empirical energy ratios fall outside [A_est - tol, B_est + tol]");
  return report;
}

}  // namespace dvnug
