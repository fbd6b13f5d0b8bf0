#include "sharp/config_io.hpp"

#include "sharp/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sharp {
namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

// Line on which the k-th entry of the "points" array opens; 0 if not found.
std::size_t point_line(const std::string& text, std::size_t k) {
  auto pos = text.find("\"points\"");
  if (pos == std::string::npos) return 0;
  pos = text.find('[', pos);
  if (pos == std::string::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] == '[') {
      if (++depth == 2 && seen++ == k) return line_of(text, pos);
    } else if (text[pos] == ']') {
      if (--depth == 0) break;
    }
  }
  return 0;
}

} // namespace

std::string to_config_json(const PointConfiguration& cfg) {
  std::string out = "{\n  \"name\": " + nlohmann::json(cfg.name()).dump() +
                    ",\n  \"dim\": " + std::to_string(cfg.dim()) + ",\n  \"points\": [\n";
  char buf[40];
  for (int i = 0; i < cfg.size(); ++i) {
    out += "    [";
    for (int j = 0; j < cfg.ambient_dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.16e", cfg.points()(j, i));
      out += (j ? ", " : "") + std::string(buf);
    }
    out += i + 1 < cfg.size() ? "],\n" : "]\n";
  }
  return out + "  ]\n}\n";
}

PointConfiguration parse_config_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object", 1);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("missing integer field \"dim\"");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw ParseError("missing array field \"points\"");
  const std::string name =
      doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "unnamed";
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be >= 1", line_of(text, text.find("\"dim\"")));

  const auto& pts = doc["points"];
  if (pts.empty()) throw ParseError("\"points\" is empty", point_line(text, 0));
  Matrix m(dim + 1, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (!p.is_array() || p.size() != static_cast<std::size_t>(dim + 1))
      throw ParseError("point " + std::to_string(i) + " must be an array of " +
                           std::to_string(dim + 1) + " numbers",
                       point_line(text, i));
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p[j].is_number())
        throw ParseError("point " + std::to_string(i) + " has a non-numeric coordinate",
                         point_line(text, i));
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = p[j].get<double>();
    }
    const double norm = m.col(static_cast<Eigen::Index>(i)).norm();
    if (std::abs(norm - 1.0) > kUnitNormTol)
      throw ParseError("point " + std::to_string(i) + " is not a unit vector (norm " +
                           std::to_string(norm) + ")",
                       point_line(text, i));
  }
  return PointConfiguration(name, dim, std::move(m));
}

void save(const PointConfiguration& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_config_json(cfg);
}

PointConfiguration load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

} // namespace sharp
