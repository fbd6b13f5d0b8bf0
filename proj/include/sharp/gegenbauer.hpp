#pragma once

#include "sharp/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace sharp {

// Ultraspherical polynomials for S^d, normalized so that P_k(1) = 1:
//   P_0 = 1, P_1 = t,
//   (k + d - 1) P_{k+1} = (2k + d - 1) t P_k - k P_{k-1}.
// For d = 1 these are the Chebyshev polynomials T_k, for d = 2 Legendre.

template <typename Scalar>
void check_gegenbauer_args(int k, int d, Scalar t) {
  using std::abs;
  if (k < 0 || d < 1) throw DomainError("gegenbauer: need k >= 0 and d >= 1");
  if (abs(t) > Scalar(1) + Scalar(1e-12))
    throw DomainError("gegenbauer: |t| > 1 (t = " + std::to_string(double(t)) + ")");
}

template <typename Scalar>
Scalar gegenbauer(int k, int d, Scalar t) {
  check_gegenbauer_args(k, d, t);
  if (k == 0) return Scalar(1);
  Scalar prev(1), cur = t;
  for (int j = 1; j < k; ++j) {
    Scalar next = (Scalar(2 * j + d - 1) * t * cur - Scalar(j) * prev) / Scalar(j + d - 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Writes P_0(t) .. P_{out.size()-1}(t) into `out`.
template <typename Scalar, typename Derived>
void gegenbauer_all(int d, Scalar t, Eigen::MatrixBase<Derived>& out) {
  const Eigen::Index n = out.size();
  if (n == 0) return;
  check_gegenbauer_args(0, d, t);
  out(0) = Scalar(1);
  if (n > 1) out(1) = t;
  for (Eigen::Index j = 1; j + 1 < n; ++j)
    out(j + 1) = (Scalar(2 * j + d - 1) * t * out(j) - Scalar(j) * out(j - 1)) / Scalar(j + d - 1);
}

/// Monomial coefficients (constant term first) of the normalized P_k for S^d.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gegenbauer_coefficients(int k, int d) {
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  check_gegenbauer_args(k, d, Scalar(0));
  Coeffs prev = Coeffs::Zero(k + 1), cur = Coeffs::Zero(k + 1);
  prev(0) = Scalar(1);
  if (k == 0) return prev;
  cur(1) = Scalar(1);
  for (int j = 1; j < k; ++j) {
    Coeffs next = Coeffs::Zero(k + 1);
    next.tail(k) = Scalar(2 * j + d - 1) * cur.head(k);
    next -= Scalar(j) * prev;
    next /= Scalar(j + d - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct WeightMoment {
  int k = 0;
  double value = 0.0;
};

/// \int_{-1}^{1} t^k w_d(t) dt for the probability density
/// w_d(t) = gamma_d (1 - t^2)^{d/2 - 1}. For even k = 2j this is the Beta ratio
/// B(j + 1/2, d/2) / B(1/2, d/2) = prod_{i<j} (2i + 1) / (2i + 1 + d).
WeightMoment weight_moment(int k, int d);

/// Sphere average of sum_k coeffs[k] t^k, i.e. \int p(t) w_d(t) dt.
double weighted_integral(const Eigen::Ref<const Eigen::VectorXd>& monomial_coeffs, int d);

} // namespace sharp
