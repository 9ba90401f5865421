#include "dvnug/lambda.hpp"

#include <numeric>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

LambdaParams LambdaParams::validate(std::int64_t N, std::int64_t r) {
  if (N < 1) throw Error(ErrorCode::NonPositive, "N must be >= 1, got " + std::to_string(N));
  if (r % 2 == 0) throw Error(ErrorCode::NonOdd, "r must be odd, got " + std::to_string(r));
  if (r < 1 || r > 2 * N - 1)
    throw Error(ErrorCode::OutOfRange, "r must lie in [1, 2N-1] = [1, " + std::to_string(2 * N - 1) +
                                           "], got " + std::to_string(r));
  if (std::gcd(r, N) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(r, N) must be 1, got gcd(" + std::to_string(r) + ", " +
                                           std::to_string(N) + ") = " + std::to_string(std::gcd(r, N)));
  return LambdaParams(static_cast<int>(N), static_cast<int>(r));
}

std::int64_t numerator(const LambdaPoint& point, const LambdaParams& params) {
  return point.n * params.period() + point.eps * params.r();
}

std::optional<LambdaPoint> point_from_numerator(std::int64_t p, const LambdaParams& params) {
  const std::int64_t residue = floor_mod(p, params.period());
  if (residue == 0) return LambdaPoint{floor_div(p, params.period()), 0};
  if (residue == params.r()) return LambdaPoint{floor_div(p, params.period()), 1};
  return std::nullopt;
}

Rational lambda_value(const LambdaPoint& point, const LambdaParams& params) {
  return {numerator(point, params), params.N()};
}

double lambda_real(const LambdaPoint& point, const LambdaParams& params) {
  return lambda_value(point, params).value();
}

std::int64_t shift_numerator(const LambdaPoint& shift, const LambdaParams& params) {
  return params.period() * numerator(shift, params);
}

LambdaPoint translate_point(const LambdaPoint& point, const LambdaPoint& shift, const LambdaParams& params) {
  // 2N * lambda(shift) = 2 * numerator(shift), an even integer, i.e. a
  // displacement of numerator(shift) in the n coordinate.
  return {point.n + numerator(shift, params), point.eps};
}

XiGrid::XiGrid(const LambdaParams& params, int Q) : params_(params) {
  if (Q < 1) throw Error(ErrorCode::NonPositive, "grid resolution must be >= 1, got " + std::to_string(Q));
  base_.reserve(static_cast<std::size_t>(Q));
  const double cell = 4.0 * params.N() * Q;
  for (int q = 0; q < Q; ++q) base_.push_back((q + 0.5) / cell);
}

Rational XiGrid::offset(int row) const {
  const std::int64_t N = params_.N();
  const std::int64_t h = row / (2 * N);
  const std::int64_t t = row % (2 * N);
  return {t + 2 * N * N * h, 4 * N};
}

XiGrid make_grid(const LambdaParams& params, int Q) { return XiGrid(params, Q); }

}  // namespace dvnug
