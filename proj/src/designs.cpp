#include "sharp/designs.hpp"

#include "sharp/errors.hpp"
#include "sharp/gegenbauer.hpp"
#include "sharp/polynomial.hpp"
#include "sharp/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sharp {

std::vector<double> design_residuals(const PointConfiguration& cfg, int cap) {
  if (cap < 0) throw std::invalid_argument("design_residuals: cap must be >= 0");
  const Matrix g = cfg.gram();
  const Eigen::Index n = g.rows();
  // Diagonal terms contribute P_k(1) = 1 each; off-diagonal pairs twice.
  Vector sums = Vector::Constant(cap + 1, static_cast<double>(n));
  Vector p(cap + 1);
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      gegenbauer_all(cfg.dim(), g(i, j), p);
      sums += 2.0 * p;
    }
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  std::vector<double> out(static_cast<std::size_t>(cap));
  for (int k = 1; k <= cap; ++k) out[static_cast<std::size_t>(k - 1)] = sums(k) / n2;
  return out;
}

namespace {
int strength_from(const std::vector<double>& residuals, double tol) {
  int n = 0;
  while (n < static_cast<int>(residuals.size()) &&
         std::abs(residuals[static_cast<std::size_t>(n)]) <= tol)
    ++n;
  return n;
}
} // namespace

int design_strength(const PointConfiguration& cfg, int cap, double tol) {
  return strength_from(design_residuals(cfg, cap), tol);
}

SharpnessReport sharpness_report(const PointConfiguration& cfg, int cap, double tol) {
  SharpnessReport r;
  r.spectrum = inner_product_spectrum(cfg);
  r.m = static_cast<int>(r.spectrum.size());
  r.antipodal = is_antipodal(cfg);
  r.cap = std::max(cap, 2 * r.m);
  r.residuals = design_residuals(cfg, r.cap);
  r.design_strength = strength_from(r.residuals, tol);
  // A single point has an empty spectrum and is sharp in no useful sense.
  r.is_sharp = r.m >= 1 && r.design_strength >= 2 * r.m - 1;
  r.is_strongly_sharp = r.m >= 1 && r.design_strength >= 2 * r.m;
  return r;
}

double design_constancy_residual(const PointConfiguration& cfg,
                                 const Eigen::Ref<const Vector>& monomial_coeffs, int trials,
                                 std::uint64_t seed) {
  const double average = cfg.size() * weighted_integral(monomial_coeffs, cfg.dim());
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = substream(seed, static_cast<std::uint64_t>(t));
    const Vector z = random_unit(cfg.ambient_dim(), rng);
    const Vector dots = cfg.points().transpose() * z;
    double sum = 0.0;
    for (double v : dots) sum += evaluate_monomial(monomial_coeffs, v);
    worst = std::max(worst, std::abs(sum - average));
  }
  return worst;
}

int min_dot_count(const PointConfiguration& cfg, int n, int trials, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("min_dot_count: n must be >= 0");
  if (design_strength(cfg, 2 * n) < 2 * n)
    throw PreconditionViolation("min_dot_count: '" + cfg.name() + "' is not a " +
                                std::to_string(2 * n) + "-design");
  int best = std::numeric_limits<int>::max();
  for (int t = 0; t < trials; ++t) {
    auto rng = substream(seed, static_cast<std::uint64_t>(t));
    const Vector z = random_unit(cfg.ambient_dim(), rng);
    best = std::min(best, static_cast<int>(dot_products(z, cfg).size()));
  }
  return best;
}

bool check_no_minus_one(const PointConfiguration& cfg) {
  return !inner_product_spectrum(cfg).contains(-1.0);
}

} // namespace sharp
