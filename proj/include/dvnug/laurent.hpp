#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>

#include "dvnug/numeric.hpp"

namespace dvnug {

/// Integration subdomain [a, b) with rational endpoints.
struct Interval {
  Rational a;
  Rational b;
};

/// Trigonometric polynomial F(xi) = sum_p c_p e^{2 pi i (p/N) xi} with integer
/// frequencies p over a fixed denominator N.
///
/// Only nonzero coefficients are stored. Every operation is exact on the
/// coefficient level except for the rounding of the complex products and of
/// the phases, which are always formed from exact rational angles.
template <typename Scalar>
class LaurentPolynomial {
 public:
  using Real = typename Scalar::value_type;
  using Terms = std::map<std::int64_t, Scalar>;

  explicit LaurentPolynomial(int N = 1) : N_(N) {}

  int denominator() const { return N_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(std::int64_t p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(std::int64_t p, Scalar c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar operator()(Real xi) const {
    Scalar total(0);
    for (const auto& [p, c] : terms_) total += c * turns_phase<Real>(static_cast<Real>(p) * xi / N_);
    return total;
  }

  /// F(base + offset) with the offset part of every phase taken exactly.
  Scalar evaluate_translate(Real base, const Rational& offset) const {
    Scalar total(0);
    for (const auto& [p, c] : terms_) {
      total += c * turns_phase<Real>(static_cast<Real>(p) * base / N_) *
               unit_phase<Real>(p * offset.num, static_cast<std::int64_t>(N_) * offset.den);
    }
    return total;
  }

  /// The function xi -> conj(F(xi)) for real xi.
  LaurentPolynomial conj() const {
    LaurentPolynomial out(N_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(-p, std::conj(c));
    return out;
  }

  /// The function xi -> F(xi + a).
  LaurentPolynomial translated(const Rational& a) const {
    LaurentPolynomial out(N_);
    for (const auto& [p, c] : terms_)
      out.add_term(p, c * unit_phase<Real>(p * a.num, static_cast<std::int64_t>(N_) * a.den));
    return out;
  }

  /// Multiplication by e^{2 pi i (q/N) xi}.
  LaurentPolynomial times_monomial(std::int64_t q) const {
    LaurentPolynomial out(N_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p + q, c);
    return out;
  }

  /// Exact integral over [a, b):
  /// (b - a) for p = 0, otherwise N (e^{2 pi i p b/N} - e^{2 pi i p a/N}) / (2 pi i p).
  Scalar integrate(const Interval& interval) const {
    Scalar total(0);
    const Real two_pi = 2 * std::numbers::pi_v<Real>;
    for (const auto& [p, c] : terms_) {
      if (p == 0) {
        total += c * static_cast<Real>(interval.b.value() - interval.a.value());
        continue;
      }
      const std::int64_t N = N_;
      const Scalar diff = unit_phase<Real>(p * interval.b.num, N * interval.b.den) -
                          unit_phase<Real>(p * interval.a.num, N * interval.a.den);
      total += c * diff * static_cast<Real>(N) / (Scalar(0, two_pi * static_cast<Real>(p)));
    }
    return total;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(Scalar s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    Terms scaled;
    for (const auto& [p, c] : terms_) {
      const Scalar v = c * s;
      if (v != Scalar(0)) scaled.emplace(p, v);
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, Scalar s) { return a *= s; }
  friend LaurentPolynomial operator*(Scalar s, LaurentPolynomial a) { return a *= s; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out(a.N_);
    for (const auto& [p, c] : a.terms_)
      for (const auto& [q, d] : b.terms_) out.add_term(p + q, c * d);
    return out;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.N_ == b.N_ && a.terms_ == b.terms_;
  }

 private:
  int N_;
  Terms terms_;
};

using Laurent = LaurentPolynomial<Complex>;

}  // namespace dvnug
