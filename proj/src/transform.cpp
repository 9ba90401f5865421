#include "dvnug/transform.hpp"

#include <algorithm>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

bool LaurentVector::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Laurent& c) { return c.is_zero(); });
}

CVector LaurentVector::operator()(double xi) const { return evaluate(*this, xi); }

LaurentVector forward(const NuSequence& z) {
  LaurentVector f(z.params(), z.dim());
  for (const auto& [point, v] : z.entries()) {
    const std::int64_t p = numerator(point, z.params());
    for (int k = 0; k < z.dim(); ++k) f.components[k].add_term(p, v(k));
  }
  return f;
}

NuSequence inverse(const LaurentVector& f) {
  NuSequence z(f.params, f.dim());
  std::map<LambdaPoint, CVector> collected;
  for (int k = 0; k < f.dim(); ++k) {
    for (const auto& [p, c] : f.components[k].terms()) {
      auto point = point_from_numerator(p, f.params);
      if (!point)
        throw Error(ErrorCode::FrequencyNotInLambda,
                    "frequency " + std::to_string(p) + " is not the numerator of a point of Lambda (residue " +
                        std::to_string(floor_mod(p, f.params.period())) + " mod " +
                        std::to_string(f.params.period()) + ")");
      auto [it, inserted] = collected.try_emplace(*point, CVector::Zero(f.dim()));
      it->second(k) = c;
    }
  }
  for (const auto& [point, v] : collected) z.set(point, v);
  return z;
}

CVector evaluate(const LaurentVector& f, double xi) {
  CVector out(f.dim());
  for (int k = 0; k < f.dim(); ++k) out(k) = f.components[k](xi);
  return out;
}

CVector evaluate_at(const LaurentVector& f, const XiGrid& grid, int q, int row) {
  const Rational offset = grid.offset(row);
  const double base = grid.base()[q];
  CVector out(f.dim());
  for (int k = 0; k < f.dim(); ++k) out(k) = f.components[k].evaluate_translate(base, offset);
  return out;
}

LaurentVector modulated_transform(const NuSequence& w, int m, int M) { return forward(modulate(w, m, M)); }

std::vector<Interval> omega_intervals(const LambdaParams& params) {
  const std::int64_t N = params.N();
  return {Interval{{0, 1}, {1, 2}}, Interval{{N, 2}, {N + 1, 2}}};
}

Complex integrate_product(const LaurentVector& f, const LaurentVector& g, std::span<const Interval> domain) {
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "transforms have " + std::to_string(f.dim()) + " and " +
                                                  std::to_string(g.dim()) + " components");
  Complex total = 0.0;
  for (int k = 0; k < f.dim(); ++k) {
    const Laurent integrand = f.components[k] * g.components[k].conj();
    for (const Interval& interval : domain) total += integrand.integrate(interval);
  }
  return total;
}

Complex integrate_product(const LaurentVector& f, const LaurentVector& g) {
  const auto domain = omega_intervals(f.params);
  return integrate_product(f, g, domain);
}

double sup_norm_on_grid(const LaurentVector& f, const XiGrid& grid) {
  double best = 0.0;
  if (f.is_zero()) return best;
  for (int q = 0; q < grid.resolution(); ++q)
    for (int row = 0; row < grid.rows(); ++row) best = std::max(best, evaluate_at(f, grid, q, row).norm());
  return best;
}

}  // namespace dvnug
