#include "sharp/certificates.hpp"

#include "sharp/errors.hpp"
#include "sharp/gegenbauer.hpp"
#include "sharp/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sharp {
namespace {

constexpr double kMinNodeGap = 1e-9;

struct SlackScan {
  double min_slack = std::numeric_limits<double>::infinity();
  double max_abs_g = 0.0;
};

template <typename Poly>
SlackScan scan_slack(const Poly& q, const CircleFunction& g, int grid_size, bool refine) {
  if (grid_size < 1) throw std::invalid_argument("verify_dominance: grid_size must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(grid_size) + 2);
  t.front() = -1.0;
  t.back() = 1.0;
  for (int j = 0; j < grid_size; ++j)
    t[static_cast<std::size_t>(j) + 1] = -std::cos(std::numbers::pi * (j + 0.5) / grid_size);

  auto slack = [&](double x) { return q(x) - g(x); };
  SlackScan out;
  std::vector<double> s(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double gv = g(t[j]);
    s[j] = q(t[j]) - gv;
    out.max_abs_g = std::max(out.max_abs_g, std::abs(gv));
    out.min_slack = std::min(out.min_slack, s[j]);
  }
  if (!refine) return out;

  // Golden section on [t_{j-1}, t_{j+1}] around every discrete local minimum.
  const double inv_phi = 1.0 / std::numbers::phi;
  for (std::size_t j = 1; j + 1 < t.size(); ++j) {
    if (!(s[j] <= s[j - 1] && s[j] <= s[j + 1])) continue;
    double a = t[j - 1], b = t[j + 1];
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = slack(c), fd = slack(d);
    for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = slack(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = slack(d);
      }
    }
    out.min_slack = std::min({out.min_slack, fc, fd});
  }
  return out;
}

} // namespace

NodeSystem::NodeSystem(std::vector<double> nodes, int nu) : nodes_(std::move(nodes)), nu_(nu) {
  if (nu_ != 0 && nu_ != 1) throw InvalidNodeSystem("node system: nu must be 0 or 1");
  if (nodes_.size() < 2) throw InvalidNodeSystem("node system: need at least two nodes");
  if (std::abs(nodes_.back() - 1.0) > 1e-12)
    throw InvalidNodeSystem("node system: last node must be 1");
  nodes_.back() = 1.0;
  if (nu_ == 0) {
    if (std::abs(nodes_.front() + 1.0) > 1e-12)
      throw InvalidNodeSystem("node system: nu = 0 requires t_1 = -1");
    nodes_.front() = -1.0;
  } else if (!(nodes_.front() > -1.0 + 1e-12)) {
    throw InvalidNodeSystem("node system: nu = 1 requires t_1 > -1");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] - nodes_[i - 1] > kMinNodeGap))
      throw InvalidNodeSystem("node system: nodes must be strictly increasing (coincident nodes "
                              "exceed their declared multiplicity)");
}

int NodeSystem::multiplicity(int i) const {
  if (i == 0) return 1 + nu_;
  return i == m() ? 1 : 2;
}

std::vector<double> NodeSystem::expanded() const {
  std::vector<double> z;
  for (int i = 0; i <= m(); ++i) z.insert(z.end(), static_cast<std::size_t>(multiplicity(i)), nodes_[static_cast<std::size_t>(i)]);
  return z;
}

NewtonPolynomial<double> hermite_interpolant(const NodeSystem& ns, const CircleFunction& g) {
  const std::vector<double> z = ns.expanded();
  const auto n = static_cast<Eigen::Index>(z.size());
  Vector nodes = Eigen::Map<const Vector>(z.data(), n);
  Vector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c(i) = g(nodes(i));
  // In-place divided differences; a repeated node pair (only at order 1,
  // multiplicities never exceed two) takes g' instead of a difference quotient.
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = n - 1; i >= j; --i) {
      if (nodes(i) == nodes(i - j)) {
        if (j != 1) throw InvalidNodeSystem("hermite_interpolant: node multiplicity above two");
        c(i) = g(nodes(i), 1);
      } else {
        c(i) = (c(i) - c(i - 1)) / (nodes(i) - nodes(i - j));
      }
    }
  return {std::move(nodes), std::move(c)};
}

double verify_dominance(const NewtonPolynomial<double>& q, const CircleFunction& g, int grid_size,
                        bool refine) {
  return scan_slack(q, g, grid_size, refine).min_slack;
}

double verify_dominance(const Eigen::Ref<const Vector>& monomial_coeffs, const CircleFunction& g,
                        int grid_size, bool refine) {
  const Vector coeffs = monomial_coeffs;
  auto q = [&](double t) { return evaluate_monomial(coeffs, t); };
  return scan_slack(q, g, grid_size, refine).min_slack;
}

bool DominanceCertificate::valid(int n_points) const {
  const double n = static_cast<double>(n_points);
  return value_residual <= kValueResidualTol * scale &&
         derivative_residual <= kDerivativeResidualTol * scale &&
         min_slack >= -kSlackTol * scale && consistency.vs_design <= kConsistencyTol * n &&
         consistency.vs_direct <= kConsistencyTol * n && consistency.constancy <= 1e-10 * n;
}

DominanceCertificate certify_max(const PointConfiguration& cfg, const PotentialFamily& fam,
                                 int grid_size) {
  if (!fam.certifiable())
    throw std::invalid_argument("certify_max: potential '" + fam.spec() +
                                "' has no closed-form derivatives on [0, 4]");
  const SharpnessReport rep = sharpness_report(cfg);
  const auto& spectrum = rep.spectrum.values;
  if (rep.m == 0 || spectrum.back() > 1.0 - rep.spectrum.clustering_tol)
    throw UnsupportedConfiguration("certify_max: '" + cfg.name() + "' has coincident points");

  int nu = 0;
  if (rep.is_strongly_sharp) {
    // Strongly sharp configurations never realize -1.
    if (rep.spectrum.contains(-1.0))
      throw std::logic_error("certify_max: strongly sharp '" + cfg.name() + "' realizes -1");
    nu = 1;
  } else if (rep.is_sharp && rep.antipodal) {
    nu = 0;
  } else {
    throw UnsupportedConfiguration(
        "certify_max: '" + cfg.name() + "' is neither strongly sharp nor antipodal sharp (m = " +
        std::to_string(rep.m) + ", strength = " + std::to_string(rep.design_strength) + ")");
  }

  std::vector<double> nodes = spectrum;
  nodes.push_back(1.0);
  NodeSystem ns(std::move(nodes), nu);
  const CircleFunction g(fam);
  NewtonPolynomial<double> q = hermite_interpolant(ns, g);
  if (rep.design_strength < q.degree_bound())
    throw std::logic_error("certify_max: design strength " + std::to_string(rep.design_strength) +
                           " below deg q = " + std::to_string(q.degree_bound()));

  DominanceCertificate cert{.config = cfg.name(),
                            .potential = fam.spec(),
                            .node_system = ns,
                            .q = q,
                            .monomial = q.monomial(),
                            .design_strength = rep.design_strength};

  for (int i = 0; i <= ns.m(); ++i) {
    const double t = ns.nodes()[static_cast<std::size_t>(i)];
    const auto [qv, dq] = q.value_and_derivative(t);
    cert.value_residual = std::max(cert.value_residual, std::abs(qv - g(t)));
    if (ns.multiplicity(i) == 2)
      cert.derivative_residual = std::max(cert.derivative_residual, std::abs(dq - g(t, 1)));
  }

  const SlackScan scan = scan_slack(q, g, grid_size, true);
  cert.min_slack = scan.min_slack;
  cert.scale = std::max(1.0, scan.max_abs_g);

  const Matrix gram = cfg.gram();
  double certified = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) certified += q(gram(0, i));
  cert.certified_value = certified;

  auto& cons = cert.consistency;
  cons.design_average = cfg.size() * weighted_integral(cert.monomial, cfg.dim());
  cons.direct_potential = potential_value(cfg.point(0), cfg, fam);
  cons.vs_design = std::abs(certified - cons.design_average);
  cons.vs_direct = std::abs(certified - cons.direct_potential);
  for (int i = 0; i < cfg.size(); ++i)
    cons.constancy =
        std::max(cons.constancy, std::abs(potential_value(cfg.point(i), cfg, fam) - certified));
  return cert;
}

bool uniqueness_check(const DominanceCertificate& cert, const PointConfiguration& cfg,
                      const PotentialFamily& fam, int samples, std::uint64_t seed) {
  const double margin = 1e-12 * cert.scale;
  for (int s = 0; s < samples; ++s) {
    auto rng = substream(seed, static_cast<std::uint64_t>(s));
    const Vector z = random_unit(cfg.ambient_dim(), rng);
    if ((cfg.points().transpose() * z).maxCoeff() > 1.0 - 1e-12) continue;
    if (potential_value(z, cfg, fam) >= cert.certified_value - margin) return false;
  }
  return true;
}

} // namespace sharp
