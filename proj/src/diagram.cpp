#include "upknot/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace upknot {

UprightDiagram::UprightDiagram(int n, std::vector<Crossing> crossings,
                               std::map<int, int> rotations)
    : n_(n), crossings_(std::move(crossings)) {
  for (const auto& [edge, v] : rotations)
    if (v != 0) rotations_.emplace(edge, v);
  auto violations = diagram_violations(n_, crossings_, rotations_);
  if (!violations.empty()) throw DiagramValidationError(std::move(violations));
  std::sort(crossings_.begin(), crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.over_in < b.over_in; });
}

int UprightDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

int UprightDiagram::total_rotation() const {
  int t = 0;
  for (const auto& [edge, v] : rotations_) t += v;
  return t;
}

std::vector<std::string> diagram_violations(int n, const std::vector<Crossing>& crossings,
                                            const std::map<int, int>& rotations) {
  std::vector<std::string> out;
  if (n < 0) {
    out.push_back("crossing count is negative");
    return out;
  }
  if (static_cast<int>(crossings.size()) != n)
    out.push_back("expected " + std::to_string(n) + " crossings, found " +
                  std::to_string(crossings.size()));

  // each edge 1..2n must enter exactly one crossing, in exactly one role
  std::vector<int> uses(2 * n + 1, 0);
  auto touch = [&](int edge, const char* role, std::size_t idx) {
    if (edge < 1 || edge > 2 * n) {
      out.push_back("crossing " + std::to_string(idx + 1) + ": " + role + " edge " +
                    std::to_string(edge) + " out of range [1, " + std::to_string(2 * n) +
                    "]");
      return;
    }
    if (++uses[edge] == 2)
      out.push_back("edge " + std::to_string(edge) + " enters more than one crossing");
  };
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const Crossing& c = crossings[k];
    if (c.sign != 1 && c.sign != -1)
      out.push_back("crossing " + std::to_string(k + 1) + ": sign must be +1 or -1");
    touch(c.over_in, "over-in", k);
    touch(c.under_in, "under-in", k);
  }
  if (static_cast<int>(crossings.size()) == n)
    for (int e = 1; e <= 2 * n; ++e)
      if (uses[e] == 0) out.push_back("edge " + std::to_string(e) + " enters no crossing");

  int total_rotation = 0;
  for (const auto& [edge, v] : rotations) {
    if (edge < 1 || edge > 2 * n + 1)
      out.push_back("rotation on edge " + std::to_string(edge) + " out of range [1, " +
                    std::to_string(2 * n + 1) + "]");
    total_rotation += v;
  }
  int writhe = 0;
  for (const auto& c : crossings) writhe += c.sign;
  if (out.empty() && (total_rotation + writhe) % 2 != 0)
    out.push_back("total rotation " + std::to_string(total_rotation) + " plus writhe " +
                  std::to_string(writhe) + " is odd");
  return out;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw SyntaxError(line.number, std::string(what) + " must be an integer, got '" + tok + "'");
  if (v < -1000000 || v > 1000000)
    throw SyntaxError(line.number, std::string(what) + " out of supported range: " + tok);
  return static_cast<int>(v);
}

}  // namespace

UprightDiagram parse_diagram(const std::string& text) {
  int n = -1;
  int n_line = 0;
  std::vector<Crossing> crossings;
  std::map<int, int> rotations;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0];
    if (head == "n") {
      if (n >= 0) throw SyntaxError(line.number, "duplicate 'n' directive");
      if (line.tokens.size() != 2) throw SyntaxError(line.number, "expected: n <count>");
      n = parse_int(line, line.tokens[1], "crossing count");
      if (n < 0) throw SyntaxError(line.number, "crossing count is negative");
      n_line = line.number;
    } else if (head == "c") {
      if (n < 0) throw SyntaxError(line.number, "'c' before 'n'");
      if (line.tokens.size() != 4)
        throw SyntaxError(line.number, "expected: c <+|-> <over_in> <under_in>");
      int sign;
      if (line.tokens[1] == "+") {
        sign = 1;
      } else if (line.tokens[1] == "-") {
        sign = -1;
      } else {
        throw SyntaxError(line.number, "crossing sign must be '+' or '-', got '" +
                                           line.tokens[1] + "'");
      }
      crossings.push_back({sign, parse_int(line, line.tokens[2], "over-in edge"),
                           parse_int(line, line.tokens[3], "under-in edge")});
    } else if (head == "phi") {
      if (n < 0) throw SyntaxError(line.number, "'phi' before 'n'");
      if (line.tokens.size() != 3)
        throw SyntaxError(line.number, "expected: phi <edge> <rotation>");
      int edge = parse_int(line, line.tokens[1], "edge");
      int v = parse_int(line, line.tokens[2], "rotation");
      if (rotations.count(edge))
        throw SyntaxError(line.number, "duplicate rotation for edge " + std::to_string(edge));
      rotations[edge] = v;
    } else {
      throw SyntaxError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (n < 0) throw SyntaxError(1, "missing 'n' directive");
  (void)n_line;
  return UprightDiagram(n, std::move(crossings), std::move(rotations));
}

std::string serialize_diagram(const UprightDiagram& d) {
  std::ostringstream out;
  out << "n " << d.crossing_count() << "\n";
  for (const Crossing& c : d.crossings())
    out << "c " << (c.sign > 0 ? '+' : '-') << ' ' << c.over_in << ' ' << c.under_in
        << "\n";
  for (const auto& [edge, v] : d.rotations()) out << "phi " << edge << ' ' << v << "\n";
  return out.str();
}

UprightDiagram kink_insert(const UprightDiagram& d, int edge, int sign,
                           KinkChirality chirality) {
  if (edge < 1 || edge > d.edge_count())
    throw EdgeOutOfRangeError("kink edge " + std::to_string(edge) + " out of range [1, " +
                              std::to_string(d.edge_count()) + "]");
  if (sign != 1 && sign != -1) throw InputError("kink sign must be +1 or -1");

  // Edge `edge` splits into edge, edge+1, edge+2; the new crossing joins the
  // first and second thirds, so anything previously entered by `edge` is now
  // entered by `edge+2`, and later edges shift up by two.
  auto remap_crossing_edge = [edge](int e) {
    if (e < edge) return e;
    if (e == edge) return edge + 2;
    return e + 2;
  };
  std::vector<Crossing> crossings;
  crossings.reserve(d.crossings().size() + 1);
  for (const Crossing& c : d.crossings())
    crossings.push_back(
        {c.sign, remap_crossing_edge(c.over_in), remap_crossing_edge(c.under_in)});
  if (chirality == KinkChirality::OverFirst) {
    crossings.push_back({sign, edge + 1, edge});
  } else {
    crossings.push_back({sign, edge, edge + 1});
  }

  std::map<int, int> rotations;
  for (const auto& [e, v] : d.rotations()) rotations[e <= edge ? e : e + 2] += v;
  rotations[edge + 1] += chirality == KinkChirality::OverFirst ? sign : -sign;

  return UprightDiagram(d.crossing_count() + 1, std::move(crossings), std::move(rotations));
}

}  // namespace upknot
