#pragma once

#include <Eigen/Dense>

#include <cassert>
#include <utility>

namespace sharp {

/// Polynomial in Newton form on a node sequence z_0, ..., z_n that may repeat:
///   q(t) = c_0 + c_1 (t - z_0) + ... + c_n (t - z_0) ... (t - z_{n-1}).
template <typename Scalar>
class NewtonPolynomial {
public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  NewtonPolynomial() = default;
  NewtonPolynomial(Coeffs nodes, Coeffs coeffs) : nodes_(std::move(nodes)), coeffs_(std::move(coeffs)) {
    assert(nodes_.size() == coeffs_.size());
  }

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeffs& nodes() const { return nodes_; }
  const Coeffs& coeffs() const { return coeffs_; }

  Scalar operator()(Scalar t) const {
    const Eigen::Index n = coeffs_.size();
    if (n == 0) return Scalar(0);
    Scalar acc = coeffs_(n - 1);
    for (Eigen::Index j = n - 2; j >= 0; --j) acc = acc * (t - nodes_(j)) + coeffs_(j);
    return acc;
  }

  /// (q(t), q'(t)) by differentiated Horner.
  std::pair<Scalar, Scalar> value_and_derivative(Scalar t) const {
    const Eigen::Index n = coeffs_.size();
    if (n == 0) return {Scalar(0), Scalar(0)};
    Scalar acc = coeffs_(n - 1), dacc(0);
    for (Eigen::Index j = n - 2; j >= 0; --j) {
      dacc = dacc * (t - nodes_(j)) + acc;
      acc = acc * (t - nodes_(j)) + coeffs_(j);
    }
    return {acc, dacc};
  }

  /// Monomial coefficients, constant term first.
  Coeffs monomial() const {
    const Eigen::Index n = coeffs_.size();
    Coeffs p = Coeffs::Zero(std::max<Eigen::Index>(n, 1));
    if (n == 0) return p;
    // p <- p * (t - z_j) + c_j, with p held in the low `len` slots.
    p(0) = coeffs_(n - 1);
    Eigen::Index len = 1;
    for (Eigen::Index j = n - 2; j >= 0; --j) {
      for (Eigen::Index i = len; i >= 1; --i) p(i) = p(i - 1) - nodes_(j) * p(i);
      p(0) = -nodes_(j) * p(0) + coeffs_(j);
      ++len;
    }
    return p;
  }

private:
  Coeffs nodes_;
  Coeffs coeffs_;
};

template <typename Scalar, typename Derived>
Scalar evaluate_monomial(const Eigen::MatrixBase<Derived>& coeffs, Scalar t) {
  Scalar acc(0);
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * t + coeffs(j);
  return acc;
}

} // namespace sharp
