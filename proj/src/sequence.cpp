#include "dvnug/sequence.hpp"

#include <cmath>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

namespace {

bool exactly_zero(const CVector& v) { return (v.array() == Complex(0.0)).all(); }

}  // namespace

NuSequence::NuSequence(const LambdaParams& params, int dim) : params_(params), dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::NonPositive, "sequence dimension must be >= 1, got " + std::to_string(dim));
}

NuSequence NuSequence::delta(const LambdaParams& params, int dim, const LambdaPoint& at, int coordinate,
                             Complex value) {
  NuSequence z(params, dim);
  if (coordinate < 0 || coordinate >= dim)
    throw Error(ErrorCode::OutOfRange, "coordinate " + std::to_string(coordinate) + " outside [0, " +
                                           std::to_string(dim) + ")");
  CVector v = CVector::Zero(dim);
  v(coordinate) = value;
  z.set(at, v);
  return z;
}

CVector NuSequence::operator()(const LambdaPoint& point) const {
  if (const CVector* v = find(point)) return *v;
  return CVector::Zero(dim_);
}

const CVector* NuSequence::find(const LambdaPoint& point) const {
  auto it = entries_.find(point);
  return it == entries_.end() ? nullptr : &it->second;
}

void NuSequence::check_size(const CVector& value) const {
  if (value.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "expected a vector of " + std::to_string(dim_) +
                                                  " components, got " + std::to_string(value.size()));
}

void NuSequence::set(const LambdaPoint& point, const CVector& value) {
  check_size(value);
  if (exactly_zero(value)) {
    entries_.erase(point);
  } else {
    entries_[point] = value;
  }
}

void NuSequence::accumulate(const LambdaPoint& point, const CVector& value) {
  check_size(value);
  auto it = entries_.find(point);
  if (it == entries_.end()) {
    if (!exactly_zero(value)) entries_.emplace(point, value);
    return;
  }
  it->second += value;
  if (exactly_zero(it->second)) entries_.erase(it);
}

double NuSequence::squared_norm() const {
  double total = 0.0;
  for (const auto& [point, v] : entries_) total += v.squaredNorm();
  return total;
}

double NuSequence::norm() const { return std::sqrt(squared_norm()); }

bool operator==(const NuSequence& a, const NuSequence& b) {
  if (!(a.params_ == b.params_) || a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  for (auto ib = b.entries_.begin(); ib != b.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

void require_compatible(const NuSequence& a, const NuSequence& b) {
  if (!(a.params() == b.params()))
    throw Error(ErrorCode::DimensionMismatch, "sequences live on different translation sets");
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, "sequence dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                                  std::to_string(b.dim()));
}

Complex inner_product(const NuSequence& z, const NuSequence& w) {
  require_compatible(z, w);
  const auto& small = z.support_size() <= w.support_size() ? z : w;
  const auto& large = z.support_size() <= w.support_size() ? w : z;
  Complex total = 0.0;
  for (const auto& [point, v] : small.entries()) {
    const CVector* u = large.find(point);
    if (u == nullptr) continue;
    // dot() conjugates its first argument.
    total += (&small == &z) ? u->dot(v) : v.dot(*u);
  }
  return total;
}

NuSequence shift(const NuSequence& z, const LambdaPoint& lambda) {
  NuSequence out(z.params(), z.dim());
  for (const auto& [point, v] : z.entries()) out.set(translate_point(point, lambda, z.params()), v);
  return out;
}

Complex modulation_phase(const LambdaPoint& point, const LambdaParams& params, int m, int M) {
  return unit_phase(static_cast<std::int64_t>(m) * numerator(point, params),
                    static_cast<std::int64_t>(M) * params.N());
}

NuSequence modulate(const NuSequence& z, int m, int M) {
  if (M < 1) throw Error(ErrorCode::NonPositive, "M must be >= 1, got " + std::to_string(M));
  if (m < 0 || m >= M)
    throw Error(ErrorCode::OutOfRange, "modulation index " + std::to_string(m) + " outside [0, " +
                                           std::to_string(M) + ")");
  if (m == 0) return z;
  NuSequence out(z.params(), z.dim());
  for (const auto& [point, v] : z.entries()) out.set(point, modulation_phase(point, z.params(), m, M) * v);
  return out;
}

NuSequence arithmetic_mean(const NuSequence& z) {
  NuSequence out(z.params(), 1);
  const double inv = 1.0 / z.dim();
  for (const auto& [point, v] : z.entries()) out.set(point, CVector::Constant(1, v.sum() * inv));
  return out;
}

NuSequence add(const NuSequence& a, const NuSequence& b) {
  require_compatible(a, b);
  NuSequence out = a;
  for (const auto& [point, v] : b.entries()) out.accumulate(point, v);
  return out;
}

NuSequence subtract(const NuSequence& a, const NuSequence& b) {
  require_compatible(a, b);
  NuSequence out = a;
  for (const auto& [point, v] : b.entries()) out.accumulate(point, -v);
  return out;
}

NuSequence scale(const NuSequence& a, Complex c) {
  NuSequence out(a.params(), a.dim());
  for (const auto& [point, v] : a.entries()) out.set(point, c * v);
  return out;
}

NuSequence coordinate(const NuSequence& z, int k) {
  if (k < 0 || k >= z.dim())
    throw Error(ErrorCode::OutOfRange, "coordinate " + std::to_string(k) + " outside [0, " +
                                           std::to_string(z.dim()) + ")");
  NuSequence out(z.params(), 1);
  for (const auto& [point, v] : z.entries()) out.set(point, CVector::Constant(1, v(k)));
  return out;
}

NuSequence coordinate_lift(const NuSequence& x, int S, int k) {
  if (x.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "coordinate_lift expects a scalar sequence");
  if (k < 0 || k >= S)
    throw Error(ErrorCode::OutOfRange, "coordinate " + std::to_string(k) + " outside [0, " + std::to_string(S) + ")");
  NuSequence out(x.params(), S);
  for (const auto& [point, v] : x.entries()) {
    CVector lifted = CVector::Zero(S);
    lifted(k) = v(0);
    out.set(point, lifted);
  }
  return out;
}

NuSequence constant_lift(const NuSequence& x, int S) {
  if (x.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "constant_lift expects a scalar sequence");
  NuSequence out(x.params(), S);
  for (const auto& [point, v] : x.entries()) out.set(point, CVector::Constant(S, v(0)));
  return out;
}

}  // namespace dvnug
