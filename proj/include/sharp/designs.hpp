#pragma once

#include "sharp/configuration.hpp"

#include <cstdint>
#include <vector>

namespace sharp {

inline constexpr int kDefaultStrengthCap = 12;
inline constexpr double kDesignTol = 1e-9;

struct SharpnessReport {
  int design_strength = 0;
  DotProductSet spectrum;
  int m = 0;
  bool antipodal = false;
  bool is_sharp = false;          // strength >= 2m - 1
  bool is_strongly_sharp = false; // strength >= 2m
  /// residuals[k-1] = S_k = N^{-2} sum_{i,j} P_k(x_i . x_j), k = 1..cap.
  std::vector<double> residuals;
  int cap = kDefaultStrengthCap;
};

/// S_k for k = 1..cap. Each S_k is >= 0 up to rounding and vanishes for
/// k = 1..n exactly when cfg is a spherical n-design.
std::vector<double> design_residuals(const PointConfiguration& cfg, int cap);

/// Largest n <= cap with |S_k| <= tol for all 1 <= k <= n.
int design_strength(const PointConfiguration& cfg, int cap = kDefaultStrengthCap,
                    double tol = kDesignTol);

/// Spectrum, strength and antipodality combined into the sharpness flags.
/// The strength cap is raised to 2m when needed so the flags are never
/// decided by truncation.
SharpnessReport sharpness_report(const PointConfiguration& cfg, int cap = kDefaultStrengthCap,
                                 double tol = kDesignTol);

/// max over `trials` random z of |sum_i p(z . x_i) - N \int p w_d|, with p
/// given by monomial coefficients. Vanishes (to rounding) when deg p does not
/// exceed the design strength.
double design_constancy_residual(const PointConfiguration& cfg,
                                 const Eigen::Ref<const Vector>& monomial_coeffs, int trials,
                                 std::uint64_t seed);

/// min over `trials` random z of |D(z, cfg)|. Requires cfg to be a 2n-design
/// (PreconditionViolation otherwise); for such cfg the result is >= n + 1.
int min_dot_count(const PointConfiguration& cfg, int n, int trials, std::uint64_t seed);

/// True iff -1 is not among the pairwise dot products.
bool check_no_minus_one(const PointConfiguration& cfg);

} // namespace sharp
