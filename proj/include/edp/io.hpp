#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edp/demand_graph.hpp"
#include "edp/realization.hpp"

namespace edp {

/// Malformed input; line() is 1-based, 0 when not tied to a line.
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InvalidInput(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

inline VertexId parse_vertex(std::string_view s, int n, int line) {
  const auto parsed = VertexId::parse(s);
  if (!parsed) throw InvalidInput(line, "bad vertex '" + std::string(s) + "'");
  const VertexId v = *parsed;
  if (!in_range(v, n)) throw InvalidInput(line, "vertex " + v.to_string() + " out of range for n=" + std::to_string(n));
  return v;
}

}  // namespace detail

/// Reads the demand format: `edp 1`, `n <int>`, then `e <u> <v> <mult>` lines.
/// `#` starts a comment. Each unordered pair may appear on one line only.
inline DemandGraph parse_demand(std::istream& in) {
  std::string raw;
  int line = 0, stage = 0, n = 0;
  std::optional<DemandGraph> d;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line;
    const auto t = detail::tokens(raw);
    if (t.empty()) continue;
    if (stage == 0) {
      if (t.size() != 2 || t[0] != "edp") throw InvalidInput(line, "expected header 'edp 1'");
      if (t[1] != "1") throw InvalidInput(line, "unsupported format version " + std::string(t[1]));
      stage = 1;
    } else if (stage == 1) {
      if (t.size() != 2 || t[0] != "n") throw InvalidInput(line, "expected 'n <int>'");
      n = detail::parse_int(t[1], line, "n");
      if (n < 1) throw InvalidInput(line, "n must be positive");
      d.emplace(n);
      stage = 2;
    } else {
      if (t[0] != "e" || t.size() != 4) throw InvalidInput(line, "expected 'e <vertex> <vertex> <multiplicity>'");
      const VertexId u = detail::parse_vertex(t[1], n, line);
      const VertexId v = detail::parse_vertex(t[2], n, line);
      if (u == v) throw InvalidInput(line, "loop at " + u.to_string());
      const int m = detail::parse_int(t[3], line, "multiplicity");
      if (m < 1) throw InvalidInput(line, "multiplicity must be positive");
      if (!seen.insert(std::minmax(to_slot(u, n), to_slot(v, n))).second) {
        throw InvalidInput(line, "pair " + u.to_string() + " " + v.to_string() + " listed twice");
      }
      d->add(u, v, m);
    }
  }
  if (stage < 2) throw InvalidInput(line, stage == 0 ? "missing header" : "missing 'n' line");
  return std::move(*d);
}

inline DemandGraph parse_demand(const std::string& text) {
  std::istringstream in(text);
  return parse_demand(in);
}

inline void write_demand(std::ostream& out, const DemandGraph& d) {
  out << "edp 1\nn " << d.n() << '\n';
  for (const auto& e : d.edges()) out << "e " << e.u.to_string() << ' ' << e.v.to_string() << ' ' << e.multiplicity << '\n';
}

inline std::string to_text(const DemandGraph& d) {
  std::ostringstream out;
  write_demand(out, d);
  return out.str();
}

/// Reads `path <label> <v0> ... <vk>` lines. Vertex indices are checked against n.
inline Realization parse_realization(std::istream& in, int n) {
  Realization r;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto t = detail::tokens(raw);
    if (t.empty()) continue;
    if (t[0] != "path" || t.size() < 4) throw InvalidInput(line, "expected 'path <label> <v0> <v1> ...'");
    const int label = detail::parse_int(t[1], line, "label");
    if (label < 1) throw InvalidInput(line, "label must be positive");
    Path p;
    for (std::size_t i = 2; i < t.size(); ++i) p.push_back(detail::parse_vertex(t[i], n, line));
    if (!r.paths.emplace(label, std::move(p)).second) throw InvalidInput(line, "label " + std::to_string(label) + " repeated");
  }
  return r;
}

inline Realization parse_realization(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_realization(in, n);
}

inline void write_realization(std::ostream& out, const Realization& r) {
  for (const auto& [label, path] : r.paths) {
    out << "path " << label;
    for (const auto& v : path) out << ' ' << v.to_string();
    out << '\n';
  }
}

inline std::string to_text(const Realization& r) {
  std::ostringstream out;
  write_realization(out, r);
  return out.str();
}

}  // namespace edp
