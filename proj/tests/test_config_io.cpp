#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharp/catalog.hpp"
#include "sharp/config_io.hpp"
#include "sharp/errors.hpp"
#include "sharp/polarization.hpp"

#include <filesystem>
#include <regex>

using namespace sharp;

namespace {
bool bit_equal(const PointConfiguration& a, const PointConfiguration& b) {
  return a.name() == b.name() && a.dim() == b.dim() && a.points().rows() == b.points().rows() &&
         a.points().cols() == b.points().cols() && (a.points().array() == b.points().array()).all();
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_config_json(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}
} // namespace

TEST_CASE("save then load is bit exact") {
  const auto dir = std::filesystem::temp_directory_path() / "sharp_config_io_test";
  std::filesystem::create_directories(dir);
  auto configs = standard_catalog();
  for (std::uint64_t s = 0; s < 20; ++s)
    configs.push_back(random_configuration(1 + static_cast<int>(s % 6), 3 + static_cast<int>(s), 7, s));
  for (const auto& cfg : configs) {
    CAPTURE(cfg.name());
    const auto path = dir / "cfg.json";
    save(cfg, path);
    CHECK(bit_equal(cfg, load(path)));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("coordinates carry 17 significant digits") {
  const std::string text = to_config_json(polygon(3));
  const std::regex number(R"([-]?\d\.(\d+)e[+-]\d+)");
  int count = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    CHECK((*it)[1].length() == 16);
    ++count;
  }
  CHECK(count == 6);
  CHECK(text.find("\"name\": \"polygon:3\"") != std::string::npos);
  CHECK(text.find("\"dim\": 1") != std::string::npos);
}

TEST_CASE("parse errors report the offending line") {
  const std::string syntax = "{\n  \"name\": \"x\",\n  \"dim\": 1,\n  \"points\": [[1, 0],, [0, 1]]\n}\n";
  CHECK(parse_error_line(syntax) == 4);

  const std::string not_unit = "{\n  \"name\": \"x\",\n  \"dim\": 1,\n  \"points\": [\n    [1, 0],\n"
                               "    [0.5, 0.5]\n  ]\n}\n";
  CHECK(parse_error_line(not_unit) == 6);

  const std::string wrong_len = "{\"dim\": 2,\n\"points\": [\n[1, 0, 0],\n[1, 0]\n]}";
  CHECK(parse_error_line(wrong_len) == 4);

  CHECK_THROWS_AS(parse_config_json("{\"points\": [[1, 0]]}"), ParseError);
  CHECK_THROWS_AS(parse_config_json("{\"dim\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_config_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_config_json("{\"dim\": 1, \"points\": [[1, \"a\"]]}"), ParseError);
  CHECK_THROWS_AS(load("/nonexistent/path/cfg.json"), std::runtime_error);
}

TEST_CASE("hand written files load") {
  const auto cfg = parse_config_json(R"({"name": "pair", "dim": 2, "points": [[0, 0, 1], [0, 0, -1]]})");
  CHECK(cfg.name() == "pair");
  CHECK(cfg.size() == 2);
  CHECK(cfg.dim() == 2);
}
