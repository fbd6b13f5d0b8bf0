#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace sharp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kClusterTol = 1e-9;

/// A finite multiset of unit vectors on S^d, stored as the columns of a
/// (d+1) x N matrix. Validated at construction and immutable afterwards.
class PointConfiguration {
public:
  PointConfiguration(std::string name, int dim, Matrix points);

  const std::string& name() const noexcept { return name_; }
  /// d, the sphere dimension; points live in R^{d+1}.
  int dim() const noexcept { return dim_; }
  int ambient_dim() const noexcept { return dim_ + 1; }
  int size() const noexcept { return static_cast<int>(points_.cols()); }

  const Matrix& points() const noexcept { return points_; }
  auto point(int i) const { return points_.col(i); }

  /// Gram matrix of all dot products, entries clamped to [-1, 1].
  Matrix gram() const;

private:
  std::string name_;
  int dim_;
  Matrix points_;
};

/// Sorted distinct reals in [-1, 1]; consecutive gaps exceed the clustering tolerance.
struct DotProductSet {
  std::vector<double> values;
  double clustering_tol = kClusterTol;

  std::size_t size() const noexcept { return values.size(); }
  bool contains(double t) const;
};

/// Single-linkage clustering of raw dot products on the real line; each
/// cluster is represented by its mean.
DotProductSet cluster_values(std::vector<double> raw, double tol = kClusterTol);

/// D(z, cfg): the distinct values of z . x_i. Throws DomainError for non-unit z.
DotProductSet dot_products(const Eigen::Ref<const Vector>& z, const PointConfiguration& cfg,
                           double tol = kClusterTol);

/// Distinct dot products over unordered pairs of distinct indices.
DotProductSet inner_product_spectrum(const PointConfiguration& cfg, double tol = kClusterTol);

bool is_antipodal(const PointConfiguration& cfg, double tol = kClusterTol);

/// Throws DomainError unless |z| = 1 within tol.
void require_unit(const Eigen::Ref<const Vector>& z, double tol = 1e-9);

} // namespace sharp
