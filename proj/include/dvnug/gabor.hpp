#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dvnug/lambda.hpp"
#include "dvnug/sequence.hpp"

namespace dvnug {

/// The system {E_{m/M} R_{2N lambda} W_j : lambda in Lambda, 0 <= m < M, 0 <= j <= P}.
class GaborSpec {
 public:
  GaborSpec() = default;

  /// Requires M >= 1, P >= 0, S >= 1 and exactly P+1 windows sharing params
  /// and dimension S. All-zero window families are accepted; reports label
  /// them as trivial.
  GaborSpec(const LambdaParams& params, int M, int S, std::vector<NuSequence> windows);

  const LambdaParams& params() const { return params_; }
  int M() const { return M_; }
  int P() const { return static_cast<int>(windows_.size()) - 1; }
  int S() const { return S_; }
  int window_count() const { return static_cast<int>(windows_.size()); }
  const std::vector<NuSequence>& windows() const { return windows_; }
  const NuSequence& window(int j) const { return windows_.at(static_cast<std::size_t>(j)); }

  bool all_windows_zero() const;

  friend bool operator==(const GaborSpec&, const GaborSpec&) = default;

 private:
  LambdaParams params_;
  int M_ = 1;
  int S_ = 1;
  std::vector<NuSequence> windows_;
};

struct CoefficientKey {
  LambdaPoint lambda;
  int m = 0;
  int j = 0;

  friend auto operator<=>(const CoefficientKey&, const CoefficientKey&) = default;
};

/// Finitely supported element of l^2(Lambda x T1 x T2). Absent keys are zero.
using CoefficientMap = std::map<CoefficientKey, Complex>;

double squared_norm(const CoefficientMap& c);
Complex inner_product(const CoefficientMap& a, const CoefficientMap& b);

/// E_{m/M} R_{2N lambda} W_j.
NuSequence frame_element(const GaborSpec& spec, const LambdaPoint& lambda, int m, int j);

/// The shifts lambda for which supp(Z) meets supp(W_j) + 2N lambda for some j,
/// in increasing order. Every analysis coefficient outside this list is zero.
std::vector<LambdaPoint> active_shift_range(const GaborSpec& spec, const NuSequence& z);

/// <Z, E_{m/M} R_{2N lambda} W_j> for a single index.
Complex analysis_coefficient(const GaborSpec& spec, const NuSequence& z, const LambdaPoint& lambda, int m, int j);

/// {<Z, E_{m/M} R_{2N lambda} W_j>} over the active shifts. Exact zeros are omitted.
CoefficientMap analysis(const GaborSpec& spec, const NuSequence& z);

/// sum c_{lambda,m,j} E_{m/M} R_{2N lambda} W_j.
NuSequence synthesis(const GaborSpec& spec, const CoefficientMap& c);

/// Xi Z = synthesis(analysis(Z)).
NuSequence frame_operator_apply(const GaborSpec& spec, const NuSequence& z);

/// sum |<Z, E_{m/M} R_{2N lambda} W_j>|^2, an exact finite sum.
double energy(const GaborSpec& spec, const NuSequence& z);

/// Shape of the random test vectors.
struct RandomSequenceOptions {
  int max_support = 6;
  std::int64_t n_min = -2;
  std::int64_t n_max = 2;
  /// Probability of adding one point far outside [n_min, n_max].
  double outlier_probability = 0.2;
  std::int64_t outlier_distance = 1000;
};

/// Options whose range covers the window supports with a margin of 2N.
RandomSequenceOptions random_options_for(const GaborSpec& spec);

/// Nonzero random sequence with standard normal complex entries.
NuSequence random_sequence(const LambdaParams& params, int S, std::mt19937_64& rng,
                           const RandomSequenceOptions& options = {});

struct FrameRatio {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// min and max of energy(Z)/||Z||^2 over `trials` seeded random Z.
FrameRatio empirical_frame_ratio(const GaborSpec& spec, int trials, std::uint64_t seed);

struct FrameSolveResult {
  NuSequence solution;
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Solves Xi X = B by conjugate gradients on sparse iterates. Throws
/// NotAFrameSuspected when the relative residual does not reach `tol` within
/// 10 * dim iterations, dim being S times the support size of B and Xi B.
FrameSolveResult solve_frame_operator(const GaborSpec& spec, const NuSequence& b, double tol = 1e-10);

}  // namespace dvnug
