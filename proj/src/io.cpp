#include "mrigid/io.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <vector>

#include "mrigid/errors.hpp"

namespace mrigid {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {std::istream_iterator<std::string>(words), {}}};
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

int integer(const Line& line, std::size_t i) {
  const std::string& w = line.words.at(i);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(w, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + w + "'");
  }
  if (used != w.size()) fail(line, "expected an integer, got '" + w + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.words.size() != n) {
    fail(line, "'" + line.words[0] + "' takes " + std::to_string(n - 1) + " values");
  }
}

}  // namespace

FileKind detect_kind(const std::string& text) {
  const auto lines = tokenize(text);
  if (!lines.empty()) {
    if (lines[0].words[0] == "polygon") return FileKind::kTiling;
    if (lines[0].words[0] == "vertices") return FileKind::kQuiver;
  }
  throw InputError("file starts with neither 'polygon' nor 'vertices'");
}

AbstractTiling parse_tiling(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words[0] != "polygon") throw InputError("missing 'polygon' header");
  AbstractTiling t;
  expect_arity(lines[0], 2);
  t.marked_points = integer(lines[0], 1);
  if (t.marked_points < 2) fail(lines[0], "a polygon needs at least two points");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words[0] != "arc") fail(line, "unknown keyword '" + line.words[0] + "'");
    expect_arity(line, 3);
    const int a = integer(line, 1);
    const int b = integer(line, 2);
    if (a < 1 || a > t.marked_points || b < 1 || b > t.marked_points || a == b) {
      fail(line, "arc endpoints out of range");
    }
    t.arcs.emplace_back(a, b);
  }
  return t;
}

std::string print_tiling(const AbstractTiling& tiling) {
  auto arcs = tiling.arcs;
  for (auto& [a, b] : arcs) {
    if (a > b) std::swap(a, b);
  }
  std::sort(arcs.begin(), arcs.end());
  std::string out = "polygon " + std::to_string(tiling.marked_points) + "\n";
  for (auto [a, b] : arcs) out += "arc " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Quiver parse_quiver(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words[0] != "vertices") throw InputError("missing 'vertices' header");
  expect_arity(lines[0], 2);
  const int count = integer(lines[0], 1);
  if (count < 0) fail(lines[0], "negative vertex count");
  std::vector<Arrow> arrows;
  std::set<std::pair<int, int>> relations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words[0] == "arrow") {
      expect_arity(line, 4);
      arrows.push_back({integer(line, 1), integer(line, 2), integer(line, 3)});
    } else if (line.words[0] == "rel") {
      expect_arity(line, 3);
      if (!relations.insert({integer(line, 1), integer(line, 2)}).second) fail(line, "duplicate relation");
    } else {
      fail(line, "unknown keyword '" + line.words[0] + "'");
    }
  }
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  return Quiver(count, std::move(arrows), std::move(relations));
}

std::string print_quiver(const Quiver& q) {
  std::string out = "vertices " + std::to_string(q.vertex_count()) + "\n";
  for (const Arrow& a : q.arrows()) {
    out += "arrow " + std::to_string(a.id) + " " + std::to_string(a.source) + " " +
           std::to_string(a.target) + "\n";
  }
  for (auto [x, y] : q.relations()) out += "rel " + std::to_string(x) + " " + std::to_string(y) + "\n";
  return out;
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace mrigid
