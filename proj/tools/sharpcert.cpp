// sharpcert: catalog, verify, certify, search, compare and energy runs over
// sharp spherical configurations.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include "sharp/catalog.hpp"
#include "sharp/certificates.hpp"
#include "sharp/config_io.hpp"
#include "sharp/designs.hpp"
#include "sharp/errors.hpp"
#include "sharp/polarization.hpp"
#include "sharp/potentials.hpp"
#include "sharp/report_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string file;
  std::string potential;
  int trials = 1000;
  int starts = 500;
  std::optional<int> grid;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  int cap = sharp::kDefaultStrengthCap;
  std::string out;
  std::string format = "json";
  bool minimize = false;
  std::optional<double> riesz;
};

sharp::PointConfiguration select_config(const Options& o) {
  if (!o.config.empty() && !o.file.empty()) throw UsageError("give either --config or --file, not both");
  if (!o.file.empty()) return sharp::load(o.file);
  if (o.config.empty()) throw UsageError("missing --config NAME or --file PATH");
  try {
    return sharp::catalog_by_name(o.config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

sharp::PotentialFamily select_potential(const Options& o) {
  if (o.potential.empty()) throw UsageError("missing --potential SPEC (e.g. gaussian:1.0)");
  try {
    return sharp::parse_potential(o.potential);
  } catch (const sharp::ParseError& e) {
    throw UsageError(e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, json j, const std::string& command, json settings) {
  j["command"] = command;
  j["settings"].update(settings);
  emit(o, j.dump(2) + "\n");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("--format " + o.format + " is not supported by this command");
}

int run_catalog(const Options& o) {
  require_format(o, {"json", "text", "csv"});
  if (o.config.empty() && o.file.empty()) {
    json list = json::array();
    std::string text;
    for (const auto& cfg : sharp::standard_catalog()) {
      list.push_back({{"name", cfg.name()}, {"dim", cfg.dim()}, {"n", cfg.size()}});
      text += cfg.name() + " d=" + std::to_string(cfg.dim()) + " N=" + std::to_string(cfg.size()) + "\n";
    }
    if (o.format == "json")
      emit(o, json{{"configurations", list}, {"names", sharp::catalog_names()}}.dump(2) + "\n");
    else
      emit(o, text);
    return kOk;
  }
  const auto cfg = select_config(o);
  if (o.format == "csv") {
    std::string text;
    char buf[40];
    for (int i = 0; i < cfg.size(); ++i) {
      for (int j = 0; j < cfg.ambient_dim(); ++j) {
        std::snprintf(buf, sizeof buf, "%.16e", cfg.points()(j, i));
        text += (j ? "," : "") + std::string(buf);
      }
      text += "\n";
    }
    emit(o, text);
  } else {
    emit(o, sharp::to_config_json(cfg));
  }
  return kOk;
}

int run_verify(const Options& o) {
  require_format(o, {"json", "text"});
  const auto cfg = select_config(o);
  const double tol = o.tol.value_or(sharp::kDesignTol);
  const auto rep = sharp::sharpness_report(cfg, o.cap, tol);
  if (o.format == "text") {
    std::string spec;
    for (double v : rep.spectrum.values) spec += " " + fmt(v);
    emit(o, cfg.name() + ": strength " + std::to_string(rep.design_strength) + ", m " +
                std::to_string(rep.m) + ", antipodal " + (rep.antipodal ? "yes" : "no") +
                ", sharp " + (rep.is_sharp ? "yes" : "no") + ", strongly sharp " +
                (rep.is_strongly_sharp ? "yes" : "no") + "\nspectrum:" + spec + "\n");
  } else {
    json j = sharp::to_json(rep);
    j["config"] = cfg.name();
    j["n"] = cfg.size();
    j["dim"] = cfg.dim();
    emit_json(o, j, "verify", {{"cap", o.cap}, {"tol", tol}});
  }
  return rep.is_sharp ? kOk : kVerificationFailure;
}

int run_certify(const Options& o) {
  require_format(o, {"json", "text"});
  const auto cfg = select_config(o);
  const auto fam = select_potential(o);
  const int grid = o.grid.value_or(sharp::kDominanceGrid);
  sharp::DominanceCertificate cert = [&] {
    try {
      return sharp::certify_max(cfg, fam, grid);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const bool ok = cert.valid(cfg.size());
  if (o.format == "text") {
    emit(o, cfg.name() + " / " + fam.spec() + ": certified max " + fmt(cert.certified_value) +
                " (nu " + std::to_string(cert.node_system.nu()) + ", deg " +
                std::to_string(cert.degree()) + ", min slack " + fmt(cert.min_slack) + ") " +
                (ok ? "VALID" : "INVALID") + "\n");
  } else {
    json j = sharp::to_json(cert);
    j["valid"] = ok;
    emit_json(o, j, "certify", {{"dominance_grid", grid}});
  }
  return ok ? kOk : kVerificationFailure;
}

sharp::SearchOptions search_options(const Options& o, int default_grid) {
  sharp::SearchOptions s;
  s.starts = o.starts;
  s.grid_size = o.grid.value_or(default_grid);
  s.seed = o.seed;
  return s;
}

json search_settings(const sharp::SearchOptions& s) {
  return {{"starts", s.starts},         {"grid", s.grid_size},         {"seed", s.seed},
          {"cluster_tol", s.cluster_tol}, {"max_iters", s.max_iters}, {"refine_candidates", s.refine_candidates}};
}

int run_search(const Options& o) {
  require_format(o, {"json", "text"});
  const auto cfg = select_config(o);
  const auto fam = select_potential(o);
  auto opts = search_options(o, 1000000);
  if (o.tol) opts.cluster_tol = *o.tol;
  const auto res = o.minimize ? sharp::global_min(cfg, fam, opts) : sharp::global_max(cfg, fam, opts);
  if (o.format == "text") {
    emit(o, cfg.name() + " / " + fam.spec() + ": " + (o.minimize ? "min " : "max ") +
                fmt(res.best_value) + " at " + std::to_string(res.argmax.size()) + " point(s), " +
                std::to_string(res.starts) + " starts (" + sharp::to_string(res.strategy) + ")\n");
  } else {
    json j = sharp::to_json(res);
    j["config"] = cfg.name();
    j["potential"] = fam.spec();
    emit_json(o, j, "search", search_settings(opts));
  }
  return kOk;
}

int run_compare(const Options& o) {
  const auto cfg = select_config(o);
  sharp::CompareOptions copts;
  copts.search = search_options(o, copts.search.grid_size);
  if (o.tol) copts.tol = *o.tol;
  sharp::ComparisonReport rep;
  try {
    if (o.riesz) {
      rep = sharp::riesz_min_compare(cfg, *o.riesz, o.trials, o.seed, copts);
    } else {
      rep = sharp::compare_random(cfg, select_potential(o), o.trials, o.seed, copts);
    }
  } catch (const sharp::DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "csv") {
    emit(o, sharp::trial_log_csv(rep));
  } else if (o.format == "text") {
    emit(o, cfg.name() + " / " + rep.potential + ": reference " + fmt(rep.reference_value) + ", " +
                std::to_string(rep.trials) + " trials, " + std::to_string(rep.violations) +
                " violations, min gap " + fmt(rep.min_gap) + "\n");
  } else {
    json settings = search_settings(copts.search);
    settings["trials"] = o.trials;
    settings["tol"] = copts.tol;
    settings["degenerate_every"] = copts.degenerate_every;
    emit_json(o, sharp::to_json(rep), "compare", settings);
  }
  return rep.violations == 0 ? kOk : kVerificationFailure;
}

int run_energy(const Options& o) {
  require_format(o, {"json", "text"});
  const auto cfg = select_config(o);
  const auto fam = select_potential(o);
  std::optional<double> certified;
  if (fam.certifiable()) {
    try {
      certified = sharp::certify_max(cfg, fam).certified_value;
    } catch (const sharp::UnsupportedConfiguration&) {
    }
  }
  const auto rep = sharp::pair_energy(cfg, fam, certified);
  if (o.format == "text") {
    emit(o, cfg.name() + " / " + fam.spec() + ": energy " + fmt(rep.energy) +
                (rep.mean_value_check ? ", mean-value check " + fmt(*rep.mean_value_check) : "") + "\n");
  } else {
    json j = sharp::to_json(rep);
    j["potential"] = fam.spec();
    emit_json(o, j, "energy", json::object());
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp spherical configurations: design checks, maximum certificates and "
               "polarization comparisons"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Catalog name (square, polygon:N, simplex:D, "
                                          "cross_polytope:D, icosahedron, schlafli, e8, ...)");
    sub->add_option("--file", o.file, "Configuration JSON file");
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto potential = [&](CLI::App* sub) {
    sub->add_option("--potential", o.potential, "gaussian:SIGMA | negpower:ALPHA | shifted:S:C | riesz:S | log");
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--starts", o.starts, "Random starts for multistart search")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid", o.grid, "Grid size")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Random seed");
  };

  auto* catalog = app.add_subcommand("catalog", "List catalog members or dump one configuration");
  common(catalog);

  auto* verify = app.add_subcommand("verify", "Design strength, spectrum and sharpness flags");
  common(verify);
  verify->add_option("--cap", o.cap, "Largest design strength tested")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", o.tol, "Design residual tolerance");

  auto* certify = app.add_subcommand("certify", "Interpolation certificate for the maximum of the potential");
  common(certify);
  potential(certify);
  certify->add_option("--grid", o.grid, "Dominance verification grid")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Global maximum (or --min) of the potential by search");
  common(search);
  potential(search);
  numeric(search);
  search->add_option("--tol", o.tol, "Angular clustering tolerance (radians)");
  search->add_flag("--min", o.minimize, "Search for the minimum instead");

  auto* compare = app.add_subcommand("compare", "Certified configuration against random competitors");
  common(compare);
  potential(compare);
  numeric(compare);
  compare->add_option("--trials", o.trials, "Number of random competitors")->check(CLI::NonNegativeNumber);
  compare->add_option("--tol", o.tol, "Violation tolerance");
  compare->add_option("--riesz", o.riesz, "Compare min_x sum |x - x_i|^S instead, 0 < S < 2");

  auto* energy = app.add_subcommand("energy", "Pairwise energy and mean-value identity");
  common(energy);
  potential(energy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*catalog) return run_catalog(o);
    if (*verify) return run_verify(o);
    if (*certify) return run_certify(o);
    if (*search) return run_search(o);
    if (*compare) return run_compare(o);
    if (*energy) return run_energy(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const sharp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const sharp::UnsupportedConfiguration& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
