#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "dvnug/numeric.hpp"

namespace dvnug {

/// Parameters of the translation set Lambda = {0, r/N} + 2Z.
///
/// Invariants: N >= 1, r odd, 1 <= r <= 2N-1, gcd(r, N) = 1. For N = 1 the
/// only admissible r is 1 and Lambda is the integer lattice.
class LambdaParams {
 public:
  LambdaParams() = default;

  /// Throws Error with NonPositive, NonOdd, OutOfRange or NotCoprime.
  static LambdaParams validate(std::int64_t N, std::int64_t r);

  int N() const { return N_; }
  int r() const { return r_; }
  /// Residues of Lambda numerators are taken modulo 2N.
  std::int64_t period() const { return 2 * static_cast<std::int64_t>(N_); }
  bool uniform() const { return N_ == 1; }

  friend bool operator==(const LambdaParams&, const LambdaParams&) = default;

 private:
  LambdaParams(int N, int r) : N_(N), r_(r) {}
  int N_ = 1;
  int r_ = 1;
};

/// The point 2n + eps*r/N of Lambda. Lexicographic order on (n, eps) agrees
/// with the order of the real values because r < 2N.
struct LambdaPoint {
  std::int64_t n = 0;
  int eps = 0;

  friend auto operator<=>(const LambdaPoint&, const LambdaPoint&) = default;
};

/// Integer p with lambda = p/N, i.e. p = 2nN + eps*r.
std::int64_t numerator(const LambdaPoint& point, const LambdaParams& params);

/// Inverse of numerator(); empty when p mod 2N is neither 0 nor r.
std::optional<LambdaPoint> point_from_numerator(std::int64_t p, const LambdaParams& params);

/// The exact value p/N.
Rational lambda_value(const LambdaPoint& point, const LambdaParams& params);
double lambda_real(const LambdaPoint& point, const LambdaParams& params);

/// Numerator displacement p -> p + 2N*numerator(shift) applied by R_{2N lambda}.
std::int64_t shift_numerator(const LambdaPoint& shift, const LambdaParams& params);

/// The point representing lambda(point) + 2N*lambda(shift). The eps component
/// of `point` is preserved since 2N*Lambda lies in 2Z.
LambdaPoint translate_point(const LambdaPoint& point, const LambdaPoint& shift, const LambdaParams& params);

/// Midpoint samples of the base cell [0, 1/4N) together with the 4N
/// translates xi + t/4N and xi + N/2 + t/4N (t = 0..2N-1) that tile Omega.
///
/// Row index convention: row = h*2N + t with h in {0, 1} selecting the half
/// [0, 1/2) or [N/2, (N+1)/2).
class XiGrid {
 public:
  XiGrid(const LambdaParams& params, int Q);

  const LambdaParams& params() const { return params_; }
  int resolution() const { return static_cast<int>(base_.size()); }
  int rows() const { return 4 * params_.N(); }
  const std::vector<double>& base() const { return base_; }

  /// Offset of translate `row` as the exact rational (t + 2N^2 h)/(4N).
  Rational offset(int row) const;
  double point(int q, int row) const { return base_[q] + offset(row).value(); }

 private:
  LambdaParams params_;
  std::vector<double> base_;
};

/// Throws Error(NonPositive) when Q < 1.
XiGrid make_grid(const LambdaParams& params, int Q);

}  // namespace dvnug
