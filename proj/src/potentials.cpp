#include "sharp/potentials.hpp"

#include "sharp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace sharp {
namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kDomainSlack = 1e-12;

// prod_{j<k} (e - j): the k-th derivative factor of t^e.
double falling(double e, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= e - j;
  return p;
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_number(const std::string& text, const std::string& spec) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw ParseError("potential '" + spec + "': '" + text + "' is not a decimal number");
  return v;
}

} // namespace

PotentialFamily::PotentialFamily(Kind kind) : kind_(std::move(kind)) {
  std::visit(overloaded{
                 [](const Gaussian& g) {
                   if (!(g.sigma > 0)) throw std::invalid_argument("gaussian: sigma must be > 0");
                 },
                 [](const NegPower& p) {
                   if (!(p.alpha > 0 && p.alpha < 1))
                     throw std::invalid_argument("negpower: alpha must lie in (0, 1)");
                 },
                 [](const ShiftedRiesz& p) {
                   if (!(p.s > 0 && p.c > 0))
                     throw std::invalid_argument("shifted: need s > 0 and C > 0");
                 },
                 [](const Riesz& p) {
                   if (!(p.s > 0)) throw std::invalid_argument("riesz: s must be > 0");
                 },
                 [](const Logarithmic&) {},
                 [](const Tabulated& t) {
                   if (t.values.size() < 2)
                     throw std::invalid_argument("tabulated: need at least 2 samples");
                   for (double v : t.values)
                     if (!std::isfinite(v)) throw std::invalid_argument("tabulated: non-finite sample");
                 },
             },
             kind_);
}

double PotentialFamily::f(double t, int order) const {
  if (order < 0) throw DomainError("potential: negative derivative order");
  if (!(t >= -kDomainSlack && t <= 4.0 + kDomainSlack))
    throw DomainError("potential: t = " + std::to_string(t) + " outside [0, 4]");
  t = std::clamp(t, 0.0, 4.0);
  auto require_positive = [&](const char* what) {
    if (t <= 0.0) throw DomainError(std::string(what) + " is singular at t = 0");
  };
  return std::visit(
      overloaded{
          [&](const Gaussian& g) { return std::pow(-g.sigma, order) * std::exp(-g.sigma * t); },
          [&](const NegPower& p) {
            if (order == 0) return t == 0.0 ? 0.0 : -std::pow(t, p.alpha);
            require_positive("negpower derivative");
            return -falling(p.alpha, order) * std::pow(t, p.alpha - order);
          },
          [&](const ShiftedRiesz& p) {
            const double e = -p.s / 2.0;
            return falling(e, order) * std::pow(t + p.c, e - order);
          },
          [&](const Riesz& p) {
            require_positive("riesz potential");
            const double e = -p.s / 2.0;
            return falling(e, order) * std::pow(t, e - order);
          },
          [&](const Logarithmic&) {
            require_positive("logarithmic potential");
            if (order == 0) return -0.5 * std::log(t);
            // d^k/dt^k log t = (-1)^{k-1} (k-1)! t^{-k}
            return -0.5 * std::pow(-1.0, order - 1) * std::tgamma(order) * std::pow(t, -order);
          },
          [&](const Tabulated& tab) {
            if (order > 1) throw DomainError("tabulated potential: only orders 0 and 1");
            const auto segments = static_cast<double>(tab.values.size() - 1);
            const double h = 4.0 / segments;
            const auto j = std::min(static_cast<std::size_t>(t / h), tab.values.size() - 2);
            const double slope = (tab.values[j + 1] - tab.values[j]) / h;
            return order == 1 ? slope : tab.values[j] + slope * (t - h * static_cast<double>(j));
          },
      },
      kind_);
}

bool PotentialFamily::certifiable() const noexcept {
  return std::holds_alternative<Gaussian>(kind_) || std::holds_alternative<NegPower>(kind_) ||
         std::holds_alternative<ShiftedRiesz>(kind_);
}

bool PotentialFamily::singular_at_zero() const noexcept {
  return std::holds_alternative<NegPower>(kind_) || std::holds_alternative<Riesz>(kind_) ||
         std::holds_alternative<Logarithmic>(kind_);
}

double PotentialFamily::f_at_zero() const {
  // NegPower extends continuously by 0; Riesz and log have no finite value.
  return f(0.0, 0);
}

int PotentialFamily::max_order() const noexcept {
  return std::holds_alternative<Tabulated>(kind_) ? 1 : 64;
}

std::string PotentialFamily::spec() const {
  return std::visit(overloaded{
                        [](const Gaussian& g) { return "gaussian:" + format_number(g.sigma); },
                        [](const NegPower& p) { return "negpower:" + format_number(p.alpha); },
                        [](const ShiftedRiesz& p) {
                          return "shifted:" + format_number(p.s) + ":" + format_number(p.c);
                        },
                        [](const Riesz& p) { return "riesz:" + format_number(p.s); },
                        [](const Logarithmic&) { return std::string("log"); },
                        [](const Tabulated& t) {
                          return "tabulated:" + std::to_string(t.values.size());
                        },
                    },
                    kind_);
}

PotentialFamily parse_potential(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i)
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  const std::string& kind = parts[0];
  auto expect = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw ParseError("potential '" + spec + "': '" + kind + "' takes " + std::to_string(n) +
                       " parameter(s)");
  };
  try {
    if (kind == "gaussian") {
      expect(1);
      return Gaussian{parse_number(parts[1], spec)};
    }
    if (kind == "negpower") {
      expect(1);
      return NegPower{parse_number(parts[1], spec)};
    }
    if (kind == "shifted") {
      expect(2);
      return ShiftedRiesz{parse_number(parts[1], spec), parse_number(parts[2], spec)};
    }
    if (kind == "riesz") {
      expect(1);
      return Riesz{parse_number(parts[1], spec)};
    }
    if (kind == "log") {
      expect(0);
      return Logarithmic{};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("potential '" + spec + "': " + e.what());
  }
  throw ParseError("unknown potential '" + spec +
                   "'; expected gaussian:SIGMA, negpower:ALPHA, shifted:S:C, riesz:S or log");
}

double CircleFunction::operator()(double t, int order) const {
  if (!(t >= -1.0 - kDomainSlack && t <= 1.0 + kDomainSlack))
    throw DomainError("circle function: t = " + std::to_string(t) + " outside [-1, 1]");
  t = std::clamp(t, -1.0, 1.0);
  return std::pow(-2.0, order) * source_.f(std::clamp(2.0 - 2.0 * t, 0.0, 4.0), order);
}

MonotonicityScan monotonicity_scan(const PotentialFamily& fam, int orders, int grid) {
  if (grid < 1) throw std::invalid_argument("monotonicity_scan: grid must be >= 1");
  MonotonicityScan scan;
  const bool negpower = std::holds_alternative<NegPower>(fam.kind());
  for (int k = 0; k <= std::min(orders, fam.max_order()); ++k) {
    double lo = std::numeric_limits<double>::infinity();
    for (int j = fam.singular_at_zero() ? 1 : 0; j <= grid; ++j) {
      const double t = 4.0 * j / grid;
      lo = std::min(lo, (k % 2 ? -1.0 : 1.0) * fam.f(t, k));
    }
    const bool checked = !(negpower && k == 0);
    const bool ok = !checked || lo >= 0.0;
    scan.orders.push_back({k, lo, checked, ok});
    scan.completely_monotone = scan.completely_monotone && ok;
  }
  return scan;
}

Vector squared_distances(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg) {
  return (cfg.points().colwise() - x).colwise().squaredNorm().transpose().cwiseMin(4.0);
}

double potential_value(const Eigen::Ref<const Vector>& x, const PointConfiguration& cfg,
                       const PotentialFamily& fam) {
  if (x.size() != cfg.ambient_dim()) throw DomainError("potential_value: dimension mismatch");
  require_unit(x);
  double sum = 0.0;
  for (double t : squared_distances(x, cfg)) sum += fam.f(t);
  return sum;
}

} // namespace sharp
