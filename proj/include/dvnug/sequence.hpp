#pragma once

#include <cstddef>
#include <map>

#include "dvnug/lambda.hpp"
#include "dvnug/numeric.hpp"

namespace dvnug {

/// A finitely supported sequence Z : Lambda -> C^S.
///
/// Storage is sparse and canonical: every stored vector has exactly `dim()`
/// components and is not exactly zero. Nothing is pruned by magnitude.
class NuSequence {
 public:
  using Storage = std::map<LambdaPoint, CVector>;

  NuSequence() = default;
  NuSequence(const LambdaParams& params, int dim);

  static NuSequence delta(const LambdaParams& params, int dim, const LambdaPoint& at, int coordinate = 0,
                          Complex value = 1.0);

  const LambdaParams& params() const { return params_; }
  int dim() const { return dim_; }
  const Storage& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Zero vector when `point` is outside the support.
  CVector operator()(const LambdaPoint& point) const;
  const CVector* find(const LambdaPoint& point) const;

  void set(const LambdaPoint& point, const CVector& value);
  void accumulate(const LambdaPoint& point, const CVector& value);

  double squared_norm() const;
  double norm() const;

  friend bool operator==(const NuSequence& a, const NuSequence& b);

 private:
  void check_size(const CVector& value) const;

  LambdaParams params_;
  int dim_ = 1;
  Storage entries_;
};

/// ScalarNuSequence: the S = 1 case, kept as the same type.
using ScalarNuSequence = NuSequence;

void require_compatible(const NuSequence& a, const NuSequence& b);

/// <Z, W> = sum over lambda, k of [Z(lambda)]_k conj([W(lambda)]_k).
Complex inner_product(const NuSequence& z, const NuSequence& w);

/// (R_{2N lambda} Z)(lambda') = Z(lambda' - 2N lambda).
NuSequence shift(const NuSequence& z, const LambdaPoint& lambda);

/// e^{2 pi i (m/M) lambda'} for the point lambda', computed from the exact
/// rational angle m*p/(M*N).
Complex modulation_phase(const LambdaPoint& point, const LambdaParams& params, int m, int M);

/// (E_{m/M} Z)(lambda') = e^{2 pi i (m/M) lambda'} Z(lambda'). Requires 0 <= m < M.
NuSequence modulate(const NuSequence& z, int m, int M);

/// Pointwise coordinate average, a scalar sequence.
NuSequence arithmetic_mean(const NuSequence& z);

NuSequence add(const NuSequence& a, const NuSequence& b);
NuSequence subtract(const NuSequence& a, const NuSequence& b);
NuSequence scale(const NuSequence& a, Complex c);

/// Coordinate k of a vector sequence as a scalar sequence.
NuSequence coordinate(const NuSequence& z, int k);
/// Scalar x placed in coordinate k of an S-dimensional sequence.
NuSequence coordinate_lift(const NuSequence& x, int S, int k);
/// Scalar x copied into all S coordinates.
NuSequence constant_lift(const NuSequence& x, int S);

}  // namespace dvnug
