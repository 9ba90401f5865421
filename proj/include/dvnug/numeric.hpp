#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace dvnug {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// A rational number num/den with den > 0. Not kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

/// e^{2 pi i num/den}. The angle is reduced modulo one turn in exact integer
/// arithmetic; quarter turns are returned exactly.
template <typename Real = double>
std::complex<Real> unit_phase(std::int64_t num, std::int64_t den) {
  const std::int64_t reduced = floor_mod(num, den);
  if (reduced == 0) return {1, 0};
  if (4 * reduced == den) return {0, 1};
  if (2 * reduced == den) return {-1, 0};
  if (4 * reduced == 3 * den) return {0, -1};
  const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(reduced) / static_cast<Real>(den);
  return std::polar(Real(1), angle);
}

/// e^{2 pi i x} for a real argument.
template <typename Real>
std::complex<Real> turns_phase(Real x) {
  return std::polar(Real(1), 2 * std::numbers::pi_v<Real> * x);
}

}  // namespace dvnug
