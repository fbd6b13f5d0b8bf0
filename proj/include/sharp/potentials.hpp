#pragma once

#include "sharp/configuration.hpp"

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace sharp {

// Potentials are functions of the squared distance t = |x - y|^2 in [0, 4].

/// f(t) = exp(-sigma t)
struct Gaussian {
  double sigma;
};
/// f(t) = -t^alpha, 0 < alpha < 1; the Riesz s-potential for -2 < s < 0 with alpha = -s/2.
struct NegPower {
  double alpha;
};
/// f(t) = (t + C)^{-s/2}
struct ShiftedRiesz {
  double s;
  double c;
};
/// f(t) = t^{-s/2}, s > 0. Unbounded at 0: energy evaluation only.
struct Riesz {
  double s;
};
/// f(t) = -log(t) / 2. Unbounded at 0: energy evaluation only.
struct Logarithmic {};
/// Piecewise linear through (4 j / (n-1), values[j]). Orders 0 and 1 only.
struct Tabulated {
  std::vector<double> values;
};

class PotentialFamily {
public:
  using Kind = std::variant<Gaussian, NegPower, ShiftedRiesz, Riesz, Logarithmic, Tabulated>;

  PotentialFamily(Kind kind); // NOLINT(google-explicit-constructor)
  template <typename Alt>
    requires(!std::is_same_v<std::decay_t<Alt>, Kind> && std::is_constructible_v<Kind, Alt>)
  PotentialFamily(Alt alt) // NOLINT(google-explicit-constructor)
      : PotentialFamily(Kind(std::move(alt))) {}

  const Kind& kind() const noexcept { return kind_; }

  /// k-th derivative f^{(k)}(t). Throws DomainError outside [0, 4], at t = 0
  /// where f^{(k)} is singular, and for unsupported orders.
  double f(double t, int order = 0) const;

  /// Closed-form derivatives of every order and f continuous on [0, 4].
  bool certifiable() const noexcept;
  /// f or f' is unbounded at t = 0.
  bool singular_at_zero() const noexcept;
  /// Value used for f(0) in self-interaction terms. Throws for singular families.
  double f_at_zero() const;
  /// Highest derivative order available (large for closed forms).
  int max_order() const noexcept;

  /// Canonical spec string ("gaussian:1", "negpower:0.5", "shifted:2:0.5", ...).
  std::string spec() const;

private:
  Kind kind_;
};

/// Parses "gaussian:SIGMA", "negpower:ALPHA", "shifted:S:C", "riesz:S", "log".
/// Numbers are read with std::from_chars, so the decimal maps to the nearest double.
PotentialFamily parse_potential(const std::string& spec);

/// g(t) = f(2 - 2t) on [-1, 1], so that f(|x - y|^2) = g(x . y) for unit x, y.
class CircleFunction {
public:
  explicit CircleFunction(PotentialFamily source) : source_(std::move(source)) {}

  const PotentialFamily& source() const noexcept { return source_; }
  int max_order() const noexcept { return source_.max_order(); }

  /// g^{(k)}(t) = (-2)^k f^{(k)}(2 - 2t).
  double operator()(double t, int order = 0) const;

private:
  PotentialFamily source_;
};

struct MonotonicityScan {
  struct Order {
    int k;
    double min_signed; // min over the grid of (-1)^k f^{(k)}
    bool checked;      // false for k = 0 on NegPower (monotone only up to a constant)
    bool ok;
  };
  std::vector<Order> orders;
  bool completely_monotone = true;
};

/// (-1)^k f^{(k)} on an (0, 4] grid for k = 0..orders.
MonotonicityScan monotonicity_scan(const PotentialFamily& fam, int orders, int grid);

/// |x - x_i|^2 for every configuration point, clamped to [0, 4]. Taken
/// directly rather than as 2 - 2 x . x_i so a point of the configuration
/// sees exactly 0 at itself.
Vector squared_distances(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg);

/// p_f(x, cfg) = sum_i f(|x - x_i|^2).
double potential_value(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg,
                       const PotentialFamily& fam);

} // namespace sharp
