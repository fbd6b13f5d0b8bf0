#include "sharp/configuration.hpp"

#include "sharp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sharp {

PointConfiguration::PointConfiguration(std::string name, int dim, Matrix points)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("configuration '" + name_ + "': dim must be >= 1");
  if (points_.cols() < 1)
    throw std::invalid_argument("configuration '" + name_ + "': needs at least one point");
  if (points_.rows() != dim_ + 1)
    throw std::invalid_argument("configuration '" + name_ + "': points must have " +
                                std::to_string(dim_ + 1) + " coordinates");
  for (Eigen::Index i = 0; i < points_.cols(); ++i) {
    const double norm = points_.col(i).norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kUnitNormTol)
      throw DomainError("configuration '" + name_ + "': point " + std::to_string(i) +
                        " is not a unit vector (norm " + std::to_string(norm) + ")");
  }
}

Matrix PointConfiguration::gram() const {
  Matrix g = points_.transpose() * points_;
  return g.cwiseMax(-1.0).cwiseMin(1.0);
}

bool DotProductSet::contains(double t) const {
  return std::any_of(values.begin(), values.end(),
                     [&](double v) { return std::abs(v - t) <= clustering_tol; });
}

DotProductSet cluster_values(std::vector<double> raw, double tol) {
  std::sort(raw.begin(), raw.end());
  DotProductSet out;
  out.clustering_tol = tol;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] - raw[i - 1] > tol) {
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += raw[j];
      out.values.push_back(sum / static_cast<double>(i - start));
      start = i;
    }
  }
  return out;
}

void require_unit(const Eigen::Ref<const Vector>& z, double tol) {
  const double norm = z.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol)
    throw DomainError("expected a unit vector, got norm " + std::to_string(norm));
}

DotProductSet dot_products(const Eigen::Ref<const Vector>& z, const PointConfiguration& cfg,
                           double tol) {
  if (z.size() != cfg.ambient_dim())
    throw DomainError("dot_products: dimension mismatch");
  require_unit(z);
  const Vector dots = (cfg.points().transpose() * z).cwiseMax(-1.0).cwiseMin(1.0);
  return cluster_values(std::vector<double>(dots.begin(), dots.end()), tol);
}

DotProductSet inner_product_spectrum(const PointConfiguration& cfg, double tol) {
  const Matrix g = cfg.gram();
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(g.rows() * (g.rows() - 1) / 2));
  for (Eigen::Index j = 1; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) raw.push_back(g(i, j));
  return cluster_values(std::move(raw), tol);
}

bool is_antipodal(const PointConfiguration& cfg, double tol) {
  const Matrix g = cfg.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    if (g.row(i).minCoeff() > -1.0 + tol) return false;
  return true;
}

} // namespace sharp
