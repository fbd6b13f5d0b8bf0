#include "sharp/polarization.hpp"

#include "sharp/certificates.hpp"
#include "sharp/errors.hpp"
#include "sharp/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace sharp {
namespace {

// Objective sign * p_f on the sphere, with its tangential gradient.
class SphereObjective {
public:
  SphereObjective(const PointConfiguration& cfg, const PotentialFamily& fam, double sign)
      : cfg_(cfg), fam_(fam), sign_(sign) {}

  double value(const Vector& x) const {
    double sum = 0.0;
    for (double t : squared_distances(x, cfg_)) {
      // Riesz and log blow up at a configuration point.
      if (t == 0.0 && fam_.singular_at_zero() && !std::holds_alternative<NegPower>(fam_.kind()))
        return sign_ * std::numeric_limits<double>::infinity();
      sum += fam_.f(t);
    }
    return sign_ * sum;
  }

  Vector gradient(const Vector& x) const {
    return sign_ * tangential_gradient(x, cfg_, fam_);
  }

private:
  const PointConfiguration& cfg_;
  const PotentialFamily& fam_;
  double sign_;
};

struct Ascent {
  Vector x;
  double value;
  bool converged;
};

// Projected gradient ascent with normalization retraction and an adaptive
// step: doubled after an accepted move, halved after a rejected one. The
// sufficient-increase constant must stay well above zero, otherwise the step
// can lock near 2 / curvature and oscillate across a flat maximum.
Ascent ascend(const SphereObjective& obj, Vector x, int max_iters) {
  x.normalize();
  double v = obj.value(x);
  Vector grad = obj.gradient(x);
  double eta = 0.1 / std::max(grad.norm(), 1e-12);
  for (int it = 0; it < max_iters; ++it) {
    const double gnorm = grad.norm();
    if (gnorm <= 1e-10 * std::max(1.0, std::abs(v))) return {x, v, true};
    eta = std::min(eta, 0.5 / gnorm); // at most half a radian per move
    if (eta * gnorm < 1e-15) return {x, v, true};
    const Vector trial = (x + eta * grad).normalized();
    const double tv = obj.value(trial);
    if (tv > v + 0.25 * eta * gnorm * gnorm) {
      x = trial;
      v = tv;
      grad = obj.gradient(x);
      eta *= 2.0;
    } else {
      eta *= 0.5;
    }
  }
  return {x, v, false};
}

// Exact line searches along the gradient, locating the sign change of the
// directional derivative by bisection. Works below the resolution of value
// comparisons, which stalls near maxima flatter than sqrt(eps).
Ascent polish(const SphereObjective& obj, const Ascent& start) {
  Vector x = start.x;
  for (int it = 0; it < 50; ++it) {
    const Vector grad = obj.gradient(x);
    const double gnorm = grad.norm();
    if (gnorm == 0.0) break;
    const Vector u = grad / gnorm;
    auto slope = [&](double s) {
      const Vector p = x * std::cos(s) + u * std::sin(s);
      return obj.gradient(p).dot(u * std::cos(s) - x * std::sin(s));
    };
    double lo = 0.0, hi = 1e-6;
    while (hi < 0.5 && slope(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
    }
    if (lo == 0.0) {
      while (hi > 1e-15 && slope(hi) <= 0.0) hi *= 0.5;
      if (hi <= 1e-15) break;
      lo = hi;
      hi *= 2.0;
    }
    for (int b = 0; b < 60 && hi - lo > 1e-16; ++b) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    const Vector next = (x * std::cos(lo) + u * std::sin(lo)).normalized();
    if ((next - x).norm() < 1e-15) break;
    x = next;
  }
  const double v = obj.value(x);
  if (v < start.value - 1e-12 * std::max(1.0, std::abs(start.value))) return start;
  return {x, v, start.converged};
}

std::vector<Vector> grid_candidates(const SphereObjective& obj, int dim, const SearchOptions& opts) {
  const int n = opts.grid_size;
  const auto keep = static_cast<std::size_t>(std::max(opts.refine_candidates, 1));
  std::vector<Vector> pts;
  std::vector<double> vals;
  pts.reserve(static_cast<std::size_t>(n));
  vals.reserve(static_cast<std::size_t>(n));
  if (dim == 1) {
    for (int j = 0; j < n; ++j) {
      const double a = 2.0 * std::numbers::pi * j / n;
      Vector x(2);
      x << std::cos(a), std::sin(a);
      vals.push_back(obj.value(x));
      pts.push_back(std::move(x));
    }
  } else {
    // Fibonacci lattice on S^2.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int j = 0; j < n; ++j) {
      const double z = 1.0 - (2.0 * j + 1.0) / n;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      Vector x(3);
      x << r * std::cos(golden * j), r * std::sin(golden * j), z;
      vals.push_back(obj.value(x));
      pts.push_back(std::move(x));
    }
  }

  std::vector<std::size_t> order;
  if (dim == 1) {
    // Discrete local maxima on the ring.
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const std::size_t prev = (j + pts.size() - 1) % pts.size(), next = (j + 1) % pts.size();
      if (vals[j] >= vals[prev] && vals[j] >= vals[next]) order.push_back(j);
    }
  } else {
    order.resize(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });

  // Greedy selection with an exclusion radius of a few grid spacings.
  const double spacing =
      dim == 1 ? 2.0 * std::numbers::pi / n : std::sqrt(4.0 * std::numbers::pi / n);
  const double min_dot = std::cos(3.0 * spacing);
  std::vector<Vector> chosen;
  for (std::size_t idx : order) {
    if (chosen.size() >= keep) break;
    const Vector& x = pts[idx];
    if (std::none_of(chosen.begin(), chosen.end(),
                     [&](const Vector& c) { return c.dot(x) > min_dot; }))
      chosen.push_back(x);
  }
  return chosen;
}

SearchResult search(const PointConfiguration& cfg, const PotentialFamily& fam,
                    const SearchOptions& opts, double sign) {
  SearchStrategy strategy = opts.strategy;
  if (strategy == SearchStrategy::Automatic)
    strategy = cfg.dim() == 1 ? SearchStrategy::Grid : SearchStrategy::Multistart;
  if (strategy == SearchStrategy::Grid && cfg.dim() > 2)
    throw std::invalid_argument("global search: grid strategy needs d <= 2");
  if (opts.extra_starts.size() > 0 && opts.extra_starts.rows() != cfg.ambient_dim())
    throw std::invalid_argument("global search: extra starts have the wrong dimension");

  const SphereObjective obj(cfg, fam, sign);
  std::vector<Vector> starts;
  if (strategy == SearchStrategy::Grid) {
    starts = grid_candidates(obj, cfg.dim(), opts);
  } else {
    for (int s = 0; s < opts.starts; ++s) {
      auto rng = substream(opts.seed, static_cast<std::uint64_t>(s));
      starts.push_back(random_unit(cfg.ambient_dim(), rng));
    }
  }
  for (Eigen::Index j = 0; j < opts.extra_starts.cols(); ++j)
    starts.emplace_back(opts.extra_starts.col(j));
  if (starts.empty()) throw std::invalid_argument("global search: no starting points");

  std::vector<Ascent> runs;
  runs.reserve(starts.size());
  int converged = 0;
  for (const Vector& s : starts) {
    runs.push_back(ascend(obj, s, opts.max_iters));
    converged += runs.back().converged ? 1 : 0;
  }
  std::stable_sort(runs.begin(), runs.end(),
                   [](const Ascent& a, const Ascent& b) { return a.value > b.value; });

  SearchResult out;
  out.strategy = strategy;
  out.maximize = sign > 0;
  out.starts = static_cast<int>(starts.size());
  out.converged_fraction = static_cast<double>(converged) / static_cast<double>(starts.size());
  const double min_dot = std::cos(opts.cluster_tol);
  auto near_best = [&](const std::vector<Ascent>& sorted) {
    const double best = sorted.front().value;
    const double value_tol = 1e-8 * std::max(1.0, std::abs(best));
    std::vector<Ascent> reps;
    for (const Ascent& r : sorted) {
      if (r.value < best - value_tol) break;
      if (std::none_of(reps.begin(), reps.end(),
                       [&](const Ascent& c) { return c.x.dot(r.x) >= min_dot; }))
        reps.push_back(r);
    }
    return reps;
  };
  std::vector<Ascent> reps = near_best(runs);
  for (Ascent& r : reps) r = polish(obj, r);
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Ascent& a, const Ascent& b) { return a.value > b.value; });
  reps = near_best(reps);
  out.best_value = sign * reps.front().value;
  for (const Ascent& r : reps) out.argmax.push_back(r.x);
  return out;
}

} // namespace

std::string to_string(SearchStrategy s) {
  switch (s) {
  case SearchStrategy::Automatic: return "automatic";
  case SearchStrategy::Grid: return "grid";
  case SearchStrategy::Multistart: return "multistart";
  }
  return "unknown";
}

Vector tangential_gradient(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg,
                           const PotentialFamily& fam) {
  const Vector args = squared_distances(x, cfg);
  Vector w(args.size());
  for (Eigen::Index i = 0; i < args.size(); ++i) {
    const double arg = args(i);
    // g'(t) = -2 f'(2 - 2t); a cusp term at x = x_i contributes no direction.
    w(i) = fam.singular_at_zero() && arg <= 0.0 ? 0.0 : -2.0 * fam.f(arg, 1);
  }
  // Project each term before summing: the radial part of sum w_i x_i is
  // large and cancels, which costs accuracy where the gradient is tiny.
  const Vector dots = cfg.points().transpose() * x;
  return (cfg.points() - x * dots.transpose()) * w;
}

SearchResult global_max(const PointConfiguration& cfg, const PotentialFamily& fam,
                        const SearchOptions& opts) {
  return search(cfg, fam, opts, 1.0);
}

SearchResult global_min(const PointConfiguration& cfg, const PotentialFamily& fam,
                        const SearchOptions& opts) {
  return search(cfg, fam, opts, -1.0);
}

EnergyReport pair_energy(const PointConfiguration& cfg, const PotentialFamily& fam,
                         std::optional<double> certified_max) {
  EnergyReport r;
  r.config = cfg.name();
  r.n = cfg.size();
  double sum = 0.0;
  for (int i = 0; i < cfg.size(); ++i)
    for (int j = 0; j < cfg.size(); ++j) {
      if (i == j) continue;
      const double t = std::min((cfg.point(i) - cfg.point(j)).squaredNorm(), 4.0);
      if (t == 0.0 && fam.singular_at_zero() && !std::holds_alternative<NegPower>(fam.kind()))
        throw DomainError("pair_energy: points " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide under a potential singular at 0");
      sum += fam.f(t);
    }
  r.energy = sum;
  if (certified_max) {
    r.certified_max = certified_max;
    const double n = cfg.size();
    r.mean_value_check = std::abs(*certified_max - (sum + n * fam.f_at_zero()) / n);
  }
  return r;
}

PointConfiguration random_configuration(int dim, int n, std::uint64_t seed, std::uint64_t stream,
                                        bool degenerate) {
  auto rng = substream(seed, stream);
  Matrix pts(dim + 1, n);
  for (int i = 0; i < n; ++i) pts.col(i) = random_unit(dim + 1, rng);
  if (degenerate && n >= 2) pts.col(n - 1) = pts.col(0);
  return PointConfiguration(degenerate ? "random-degenerate" : "random", dim, std::move(pts));
}

TrialRecord compare_competitor(const PointConfiguration& competitor, double reference,
                               const PotentialFamily& fam, const SearchOptions& search_opts) {
  SearchOptions opts = search_opts;
  // Every competitor point is a valid lower bound on its Q_f, and the best of
  // them already dominates the reference when the competitor is no better.
  opts.extra_starts = competitor.points();
  const SearchResult res = global_max(competitor, fam, opts);
  TrialRecord rec;
  rec.seed = opts.seed;
  rec.competitor_value = res.best_value;
  rec.gap = res.best_value - reference;
  return rec;
}

ComparisonReport compare_random(const PointConfiguration& cfg_sharp, const PotentialFamily& fam,
                                int trials, std::uint64_t seed, const CompareOptions& opts) {
  const DominanceCertificate cert = certify_max(cfg_sharp, fam);
  ComparisonReport rep;
  rep.config = cfg_sharp.name();
  rep.potential = fam.spec();
  rep.reference_value = cert.certified_value;
  rep.trials = trials;
  rep.tol = opts.tol;
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = substream(seed, static_cast<std::uint64_t>(t))();
    const bool degenerate =
        opts.degenerate_every > 0 && t % opts.degenerate_every == opts.degenerate_every - 1;
    const PointConfiguration competitor =
        random_configuration(cfg_sharp.dim(), cfg_sharp.size(), trial_seed, 0, degenerate);
    SearchOptions search_opts = opts.search;
    search_opts.seed = trial_seed;
    TrialRecord rec = compare_competitor(competitor, rep.reference_value, fam, search_opts);
    rec.trial_id = t;
    rec.degenerate = degenerate;
    rep.competitor_values.push_back(rec.competitor_value);
    rep.min_gap = std::min(rep.min_gap, rec.gap);
    if (rec.gap < -opts.tol) ++rep.violations;
    rep.records.push_back(rec);
  }
  if (trials == 0) rep.min_gap = 0.0;
  return rep;
}

ComparisonReport riesz_min_compare(const PointConfiguration& cfg_sharp, double s, int trials,
                                   std::uint64_t seed, const CompareOptions& opts) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError("riesz_min_compare: s must lie in (0, 2)");
  // max_x -sum |x - x_i|^s = -min_x sum |x - x_i|^s, so the certificate of
  // f(t) = -t^{s/2} pins the Riesz-sum minimum.
  ComparisonReport rep = compare_random(cfg_sharp, NegPower{s / 2.0}, trials, seed, opts);
  rep.sense = "riesz_min";
  rep.reference_value = -rep.reference_value;
  for (double& v : rep.competitor_values) v = -v;
  for (TrialRecord& r : rep.records) r.competitor_value = -r.competitor_value;
  return rep;
}

ComparisonReport gaussian_max_compare(const PointConfiguration& cfg_sharp, double sigma,
                                      int trials, std::uint64_t seed, const CompareOptions& opts) {
  return compare_random(cfg_sharp, Gaussian{sigma}, trials, seed, opts);
}

} // namespace sharp
