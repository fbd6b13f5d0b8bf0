#pragma once

#include "sharp/configuration.hpp"
#include "sharp/potentials.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sharp {

enum class SearchStrategy {
  Automatic, // Grid on S^1, Multistart otherwise
  Grid,      // dense grid (angles on S^1, Fibonacci lattice on S^2) + ascent refinement
  Multistart // random starts + projected gradient ascent
};

std::string to_string(SearchStrategy s);

struct SearchOptions {
  int starts = 500;
  int grid_size = 1000000;
  std::uint64_t seed = 0;
  double cluster_tol = 1e-4; // radians
  SearchStrategy strategy = SearchStrategy::Automatic;
  int max_iters = 5000;
  int refine_candidates = 64; // grid candidates handed to local ascent
  /// Additional starting points (columns), e.g. the points of a competitor.
  Matrix extra_starts;
};

struct SearchResult {
  double best_value = 0.0;
  std::vector<Vector> argmax; // clustered optimizers, unit norm
  int starts = 0;
  double converged_fraction = 0.0;
  SearchStrategy strategy = SearchStrategy::Multistart;
  bool maximize = true;
};

/// Q_f(cfg) = max_{x in S^d} p_f(x, cfg) by search.
SearchResult global_max(const PointConfiguration& cfg, const PotentialFamily& fam,
                        const SearchOptions& opts = {});
/// P_f(cfg) = min_{x in S^d} p_f(x, cfg) by search; no certificate.
SearchResult global_min(const PointConfiguration& cfg, const PotentialFamily& fam,
                        const SearchOptions& opts = {});

/// Euclidean gradient of p_f at x (sum_i g'(x . x_i) x_i) projected onto the
/// tangent space at x. Terms with x at a singular point of g' are dropped.
Vector tangential_gradient(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg,
                           const PotentialFamily& fam);

struct EnergyReport {
  std::string config;
  int n = 0;
  double energy = 0.0; // sum_{i != j} f(|x_i - x_j|^2)
  std::optional<double> certified_max;
  std::optional<double> mean_value_check; // |Q_f - (energy + N f(0)) / N|
};

/// Ordered-pair energy from explicit squared distances. Throws DomainError
/// for coincident points under a family singular at 0. The mean-value
/// check is filled in when `certified_max` is given.
EnergyReport pair_energy(const PointConfiguration& cfg, const PotentialFamily& fam,
                         std::optional<double> certified_max = std::nullopt);

struct TrialRecord {
  int trial_id = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;
  double competitor_value = 0.0;
  double gap = 0.0; // signed so that gap < 0 means the competitor beats the reference
};

struct ComparisonReport {
  std::string config;
  std::string potential;
  /// "max" for max-polarization (reference <= competitor expected), "riesz_min"
  /// for min_x sum |x - x_i|^s (reference >= competitor expected).
  std::string sense = "max";
  double reference_value = 0.0;
  int trials = 0;
  std::vector<double> competitor_values;
  std::vector<TrialRecord> records;
  int violations = 0;
  double min_gap = 0.0;
  double tol = 1e-6;
};

struct CompareOptions {
  SearchOptions search = [] {
    SearchOptions s;
    s.grid_size = 20000;
    return s;
  }();
  int degenerate_every = 10; // every k-th trial duplicates one point
  double tol = 1e-6;
};

/// N-point i.i.d. uniform configuration on S^d; with `degenerate`, the last
/// point is a copy of the first.
PointConfiguration random_configuration(int dim, int n, std::uint64_t seed, std::uint64_t stream,
                                        bool degenerate = false);

/// Reference Q_f from the certificate of cfg_sharp against Q_f of `trials`
/// random competitors (searched with their own points as extra starts).
ComparisonReport compare_random(const PointConfiguration& cfg_sharp, const PotentialFamily& fam,
                                int trials, std::uint64_t seed, const CompareOptions& opts = {});

/// Compares a single competitor configuration against the certified reference.
TrialRecord compare_competitor(const PointConfiguration& competitor, double reference,
                               const PotentialFamily& fam, const SearchOptions& search);

/// min_x sum_i |x - x_i|^s of cfg_sharp is never exceeded by a random
/// competitor, 0 < s < 2. Values are reported as Riesz sums.
ComparisonReport riesz_min_compare(const PointConfiguration& cfg_sharp, double s, int trials,
                                   std::uint64_t seed, const CompareOptions& opts = {});

ComparisonReport gaussian_max_compare(const PointConfiguration& cfg_sharp, double sigma,
                                      int trials, std::uint64_t seed,
                                      const CompareOptions& opts = {});

} // namespace sharp
