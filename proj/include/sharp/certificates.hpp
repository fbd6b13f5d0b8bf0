#pragma once

#include "sharp/configuration.hpp"
#include "sharp/designs.hpp"
#include "sharp/polynomial.hpp"
#include "sharp/potentials.hpp"

#include <cstdint>
#include <vector>

namespace sharp {

/// Interpolation nodes -1 <= t_1 < ... < t_m < t_{m+1} = 1 with
/// L = 2m - 2 + nu. t_1 carries multiplicity 1 + nu, t_2..t_m multiplicity 2
/// and t_{m+1} multiplicity 1, for L + 2 conditions in total.
class NodeSystem {
public:
  /// Throws InvalidNodeSystem unless nodes are strictly increasing, end at 1,
  /// and t_1 = -1 (nu = 0) or t_1 > -1 (nu = 1).
  NodeSystem(std::vector<double> nodes, int nu);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  int nu() const noexcept { return nu_; }
  int m() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  int L() const noexcept { return 2 * m() - 2 + nu_; }
  int multiplicity(int i) const;
  /// Nodes repeated per multiplicity, ascending: the Newton node sequence.
  std::vector<double> expanded() const;

private:
  std::vector<double> nodes_;
  int nu_;
};

/// Hermite interpolant of degree <= L + 1: q = g at every node and q' = g'
/// at every node of multiplicity two, via divided differences on the
/// expanded node sequence.
NewtonPolynomial<double> hermite_interpolant(const NodeSystem& ns, const CircleFunction& g);

inline constexpr int kDominanceGrid = 100000;

/// min over [-1, 1] of q - g: Chebyshev grid plus both endpoints, then golden
/// section refinement around each discrete local minimum when `refine`.
double verify_dominance(const NewtonPolynomial<double>& q, const CircleFunction& g,
                        int grid_size = kDominanceGrid, bool refine = true);

/// Overload for an arbitrary polynomial in monomial form.
double verify_dominance(const Eigen::Ref<const Vector>& monomial_coeffs, const CircleFunction& g,
                        int grid_size = kDominanceGrid, bool refine = true);

struct CertificateConsistency {
  double design_average = 0.0;   // N \int q w_d
  double direct_potential = 0.0; // p_f(y) at y = x_1
  double vs_design = 0.0;        // |certified - N \int q w_d|
  double vs_direct = 0.0;        // |certified - p_f(y)|
  double constancy = 0.0;        // max_i |p_f(x_i) - certified|
};

struct DominanceCertificate {
  std::string config;
  std::string potential;
  NodeSystem node_system;
  NewtonPolynomial<double> q;
  Vector monomial;
  int design_strength = 0;
  double scale = 1.0;             // max(1, max |g|) on the dominance grid
  double value_residual = 0.0;    // max |q(t_i) - g(t_i)|
  double derivative_residual = 0.0; // max |q'(t_i) - g'(t_i)| over double nodes
  double min_slack = 0.0;
  double certified_value = 0.0;   // sum_i q(y . x_i), y in the configuration
  CertificateConsistency consistency{};

  int degree() const { return q.degree_bound(); }
  /// Residual, slack and consistency readings all within tolerance.
  bool valid(int n_points) const;
};

inline constexpr double kValueResidualTol = 1e-11;
inline constexpr double kDerivativeResidualTol = 1e-9;
inline constexpr double kSlackTol = 1e-9;
inline constexpr double kConsistencyTol = 1e-9;

/// Certifies max_{S^d} p_f = certified_value, attained on cfg. Strongly
/// sharp cfg uses nu = 1 on the spectrum plus {1}; antipodal sharp cfg uses
/// nu = 0. Throws UnsupportedConfiguration for anything else, and
/// std::invalid_argument for families without closed-form derivatives.
DominanceCertificate certify_max(const PointConfiguration& cfg, const PotentialFamily& fam,
                                 int grid_size = kDominanceGrid);

/// True if p_f(z) is strictly below the certified value at `samples` random
/// points z away from the configuration.
bool uniqueness_check(const DominanceCertificate& cert, const PointConfiguration& cfg,
                      const PotentialFamily& fam, int samples, std::uint64_t seed = 0);

} // namespace sharp
