#include "dvnug/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "dvnug/error.hpp"

namespace dvnug {

GaborSpec::GaborSpec(const LambdaParams& params, int M, int S, std::vector<NuSequence> windows)
    : params_(params), M_(M), S_(S), windows_(std::move(windows)) {
  if (M < 1) throw Error(ErrorCode::NonPositive, "M must be >= 1, got " + std::to_string(M));
  if (S < 1) throw Error(ErrorCode::NonPositive, "S must be >= 1, got " + std::to_string(S));
  if (windows_.empty()) throw Error(ErrorCode::NonPositive, "at least one window (P >= 0) is required");
  for (std::size_t j = 0; j < windows_.size(); ++j) {
    if (!(windows_[j].params() == params))
      throw Error(ErrorCode::DimensionMismatch, "window " + std::to_string(j) + " uses different (N, r)");
    if (windows_[j].dim() != S)
      throw Error(ErrorCode::DimensionMismatch, "window " + std::to_string(j) + " has dimension " +
                                                    std::to_string(windows_[j].dim()) + ", expected " +
                                                    std::to_string(S));
  }
}

bool GaborSpec::all_windows_zero() const {
  return std::all_of(windows_.begin(), windows_.end(), [](const NuSequence& w) { return w.empty(); });
}

double squared_norm(const CoefficientMap& c) {
  double total = 0.0;
  for (const auto& [key, value] : c) total += std::norm(value);
  return total;
}

Complex inner_product(const CoefficientMap& a, const CoefficientMap& b) {
  Complex total = 0.0;
  for (const auto& [key, value] : a) {
    auto it = b.find(key);
    if (it != b.end()) total += value * std::conj(it->second);
  }
  return total;
}

namespace {

void check_indices(const GaborSpec& spec, int m, int j) {
  if (m < 0 || m >= spec.M())
    throw Error(ErrorCode::OutOfRange, "m = " + std::to_string(m) + " outside [0, " + std::to_string(spec.M()) + ")");
  if (j < 0 || j > spec.P())
    throw Error(ErrorCode::OutOfRange, "j = " + std::to_string(j) + " outside [0, " + std::to_string(spec.P()) + "]");
}

void check_signal(const GaborSpec& spec, const NuSequence& z) {
  if (!(z.params() == spec.params()))
    throw Error(ErrorCode::DimensionMismatch, "signal uses different (N, r) than the system");
  if (z.dim() != spec.S())
    throw Error(ErrorCode::DimensionMismatch, "signal has dimension " + std::to_string(z.dim()) + ", system has S = " +
                                                  std::to_string(spec.S()));
}

}  // namespace

NuSequence frame_element(const GaborSpec& spec, const LambdaPoint& lambda, int m, int j) {
  check_indices(spec, m, j);
  return modulate(shift(spec.window(j), lambda), m, spec.M());
}

std::vector<LambdaPoint> active_shift_range(const GaborSpec& spec, const NuSequence& z) {
  check_signal(spec, z);
  std::set<LambdaPoint> shifts;
  // z = w + 2N lambda means z.eps = w.eps and z.n - w.n = numerator(lambda).
  for (const NuSequence& w : spec.windows())
    for (const auto& [zp, zv] : z.entries())
      for (const auto& [wp, wv] : w.entries()) {
        if (zp.eps != wp.eps) continue;
        if (auto lambda = point_from_numerator(zp.n - wp.n, spec.params())) shifts.insert(*lambda);
      }
  return {shifts.begin(), shifts.end()};
}

Complex analysis_coefficient(const GaborSpec& spec, const NuSequence& z, const LambdaPoint& lambda, int m, int j) {
  check_indices(spec, m, j);
  Complex total = 0.0;
  for (const auto& [wp, wv] : spec.window(j).entries()) {
    const LambdaPoint at = translate_point(wp, lambda, spec.params());
    const CVector* zv = z.find(at);
    if (zv == nullptr) continue;
    const Complex phase = modulation_phase(at, spec.params(), m, spec.M());
    total += (phase * wv).dot(*zv);
  }
  return total;
}

CoefficientMap analysis(const GaborSpec& spec, const NuSequence& z) {
  CoefficientMap out;
  for (const LambdaPoint& lambda : active_shift_range(spec, z))
    for (int m = 0; m < spec.M(); ++m)
      for (int j = 0; j <= spec.P(); ++j) {
        const Complex c = analysis_coefficient(spec, z, lambda, m, j);
        if (c != Complex(0.0)) out.emplace(CoefficientKey{lambda, m, j}, c);
      }
  return out;
}

NuSequence synthesis(const GaborSpec& spec, const CoefficientMap& c) {
  NuSequence out(spec.params(), spec.S());
  for (const auto& [key, value] : c) {
    check_indices(spec, key.m, key.j);
    for (const auto& [wp, wv] : spec.window(key.j).entries()) {
      const LambdaPoint at = translate_point(wp, key.lambda, spec.params());
      out.accumulate(at, (value * modulation_phase(at, spec.params(), key.m, spec.M())) * wv);
    }
  }
  return out;
}

NuSequence frame_operator_apply(const GaborSpec& spec, const NuSequence& z) {
  return synthesis(spec, analysis(spec, z));
}

double energy(const GaborSpec& spec, const NuSequence& z) { return squared_norm(analysis(spec, z)); }

RandomSequenceOptions random_options_for(const GaborSpec& spec) {
  RandomSequenceOptions options;
  std::int64_t lo = 0, hi = 0;
  for (const NuSequence& w : spec.windows())
    for (const auto& [p, v] : w.entries()) {
      lo = std::min(lo, p.n);
      hi = std::max(hi, p.n);
    }
  options.n_min = lo - spec.params().period();
  options.n_max = hi + spec.params().period();
  return options;
}

NuSequence random_sequence(const LambdaParams& params, int S, std::mt19937_64& rng,
                           const RandomSequenceOptions& options) {
  std::uniform_int_distribution<int> size_dist(1, std::max(1, options.max_support));
  std::uniform_int_distribution<std::int64_t> n_dist(options.n_min, options.n_max);
  std::uniform_int_distribution<int> eps_dist(0, 1);
  std::bernoulli_distribution outlier(options.outlier_probability);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto random_vector = [&] {
    CVector v(S);
    for (int k = 0; k < S; ++k) v(k) = Complex(gauss(rng), gauss(rng));
    return v;
  };

  NuSequence z(params, S);
  const int count = size_dist(rng);
  for (int i = 0; i < count; ++i) z.set(LambdaPoint{n_dist(rng), eps_dist(rng)}, random_vector());
  if (outlier(rng)) {
    const std::int64_t side = eps_dist(rng) == 0 ? -1 : 1;
    const std::int64_t n = side < 0 ? options.n_min - options.outlier_distance : options.n_max + options.outlier_distance;
    z.set(LambdaPoint{n, eps_dist(rng)}, random_vector());
  }
  return z;
}

FrameRatio empirical_frame_ratio(const GaborSpec& spec, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::NonPositive, "trials must be >= 1, got " + std::to_string(trials));
  std::mt19937_64 rng(seed);
  const RandomSequenceOptions options = random_options_for(spec);
  FrameRatio ratio{std::numeric_limits<double>::infinity(), 0.0};
  for (int t = 0; t < trials; ++t) {
    const NuSequence z = random_sequence(spec.params(), spec.S(), rng, options);
    const double value = energy(spec, z) / z.squared_norm();
    ratio.min_ratio = std::min(ratio.min_ratio, value);
    ratio.max_ratio = std::max(ratio.max_ratio, value);
  }
  return ratio;
}

FrameSolveResult solve_frame_operator(const GaborSpec& spec, const NuSequence& b, double tol) {
  check_signal(spec, b);
  FrameSolveResult result{NuSequence(spec.params(), spec.S()), 0, 0.0};
  const double b_norm = b.norm();
  if (b_norm == 0.0) return result;

  const NuSequence xi_b = frame_operator_apply(spec, b);
  std::set<LambdaPoint> span;
  for (const auto& [p, v] : b.entries()) span.insert(p);
  for (const auto& [p, v] : xi_b.entries()) span.insert(p);
  const int max_iterations = 10 * spec.S() * static_cast<int>(span.size());

  NuSequence x(spec.params(), spec.S());
  NuSequence r = b;
  NuSequence d = b;
  double rr = r.squared_norm();
  for (int it = 1; it <= max_iterations; ++it) {
    const NuSequence xi_d = it == 1 ? xi_b : frame_operator_apply(spec, d);
    const double curvature = inner_product(xi_d, d).real();
    if (!(curvature > 0.0)) break;
    const double alpha = rr / curvature;
    x = add(x, scale(d, alpha));
    r = subtract(r, scale(xi_d, alpha));
    const double rr_next = r.squared_norm();
    result.iterations = it;
    result.relative_residual = std::sqrt(rr_next) / b_norm;
    if (result.relative_residual <= tol) {
      result.solution = std::move(x);
      return result;
    }
    d = add(r, scale(d, rr_next / rr));
    rr = rr_next;
  }
  throw Error(ErrorCode::NotAFrameSuspected,
              "conjugate gradients stalled at relative residual " + std::to_string(result.relative_residual) +
                  " after " + std::to_string(result.iterations) + " iterations");
}

}  // namespace dvnug
