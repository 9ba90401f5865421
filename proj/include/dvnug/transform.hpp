#pragma once

#include <span>
#include <vector>

#include "dvnug/laurent.hpp"
#include "dvnug/lambda.hpp"
#include "dvnug/sequence.hpp"

namespace dvnug {

/// The S-component Fourier transform of a finitely supported sequence, one
/// Laurent polynomial per coordinate.
struct LaurentVector {
  LambdaParams params;
  std::vector<Laurent> components;

  LaurentVector() = default;
  LaurentVector(const LambdaParams& p, int dim) : params(p), components(static_cast<std::size_t>(dim), Laurent(p.N())) {}

  int dim() const { return static_cast<int>(components.size()); }
  bool is_zero() const;
  CVector operator()(double xi) const;

  friend bool operator==(const LaurentVector&, const LaurentVector&) = default;
};

/// F(Z)(xi) = sum_lambda Z(lambda) e^{2 pi i lambda xi}; the coefficient at
/// frequency p is Z(p/N).
LaurentVector forward(const NuSequence& z);

/// Coefficient extraction. Throws FrequencyNotInLambda for a frequency p with
/// p mod 2N outside {0, r}.
NuSequence inverse(const LaurentVector& f);

CVector evaluate(const LaurentVector& f, double xi);
/// F at grid point (q, row), with the translate offset applied exactly.
CVector evaluate_at(const LaurentVector& f, const XiGrid& grid, int q, int row);

/// F(E_{m/M} W).
LaurentVector modulated_transform(const NuSequence& w, int m, int M);

/// Omega = [0, 1/2) u [N/2, (N+1)/2).
std::vector<Interval> omega_intervals(const LambdaParams& params);

/// sum_k int_domain [F]_k conj([G]_k) in closed form.
Complex integrate_product(const LaurentVector& f, const LaurentVector& g, std::span<const Interval> domain);
Complex integrate_product(const LaurentVector& f, const LaurentVector& g);

/// Largest C^S norm of F over every translate point of the grid. A lower
/// estimate of the essential supremum over Omega.
double sup_norm_on_grid(const LaurentVector& f, const XiGrid& grid);

}  // namespace dvnug
