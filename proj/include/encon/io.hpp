#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "encon/bipoly.hpp"
#include "encon/energy.hpp"
#include "encon/laurent.hpp"
#include "encon/matrix.hpp"
#include "encon/multigraph.hpp"
#include "encon/report.hpp"
#include "encon/set_system.hpp"

namespace encon {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Set systems: {"sets": [[1,2],[2,3]], "energy": {...}} and a plain-text
// format with one cell per line, atoms space-separated, '#' comments.

inline ordered_json system_to_json(const SetSystem& s) {
  ordered_json j;
  j["sets"] = ordered_json::array();
  for (const Cell& c : s.cells()) j["sets"].push_back(c.atoms());
  return j;
}

inline SetSystem system_from_json(const json& j) {
  if (!j.contains("sets") || !j["sets"].is_array())
    throw std::invalid_argument("system json: missing \"sets\" array");
  std::vector<Cell> cells;
  for (const auto& arr : j["sets"]) {
    std::vector<int> atoms;
    for (const auto& a : arr) atoms.push_back(a.get<int>());
    cells.emplace_back(std::move(atoms));
  }
  return SetSystem(std::move(cells));
}

inline SetSystem system_from_text(const std::string& text) {
  std::vector<Cell> cells;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> atoms;
    int a;
    while (ls >> a) atoms.push_back(a);
    if (!atoms.empty()) cells.emplace_back(std::move(atoms));
  }
  return SetSystem(std::move(cells));
}

inline std::string system_to_text(const SetSystem& s) {
  std::string out;
  for (const Cell& c : s.cells()) {
    for (std::size_t i = 0; i < c.atoms().size(); ++i)
      out += (i ? " " : "") + std::to_string(c.atoms()[i]);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Energies.  {"energy": {"kind": "constant|omega|spin|explicit", "values": [...]}}
// Integer values may be JSON numbers or decimal strings; rationals "p/q".

inline const char* kind_name(EnergyKind k) {
  switch (k) {
    case EnergyKind::Constant: return "constant";
    case EnergyKind::Omega: return "omega";
    case EnergyKind::Spin: return "spin";
    default: return "explicit";
  }
}

template <class R>
ordered_json energy_to_json(const Energy<R>& h) {
  ordered_json j;
  j["kind"] = kind_name(h.kind);
  j["values"] = ordered_json::array();
  for (const R& v : h.values) j["values"].push_back(RingTraits<R>::str(v));
  return j;
}

inline Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Int(v.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

inline Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw std::invalid_argument("expected integer or rational string");
}

/// Either an Int- or a Rat-valued energy, depending on what the values need.
using EnergyVariant = std::variant<Energy<Int>, Energy<Rat>>;

inline EnergyVariant energy_from_json(const SetSystem& s, const json& j) {
  const std::string kind = j.value("kind", "explicit");
  if (kind == "omega") return omega_energy<Int>(s);
  if (kind == "constant") {
    if (!j.contains("values") || j["values"].empty())
      throw std::invalid_argument("constant energy: need one value");
    return constant_energy(s, int_from_json(j["values"][0]));
  }
  if (!j.contains("values"))
    throw std::invalid_argument("energy json: missing \"values\"");
  bool rational = false;
  for (const auto& v : j["values"])
    if (v.is_string() && v.get<std::string>().find('/') != std::string::npos) rational = true;
  if (rational) {
    std::vector<Rat> vals;
    for (const auto& v : j["values"]) vals.push_back(rat_from_json(v));
    return explicit_energy(s, std::move(vals));
  }
  std::vector<Int> vals;
  for (const auto& v : j["values"]) vals.push_back(int_from_json(v));
  if (kind == "spin") {
    std::vector<int> signs;
    for (const Int& v : vals) signs.push_back(static_cast<int>(v.get_si()));
    return spin_energy(s, signs);
  }
  return explicit_energy(s, std::move(vals));
}

// ---------------------------------------------------------------------------
// Matrices.  {"n": k, "ring": "...", "rows": [[...]]}; Laurent entries are
// {"shift": e, "coeffs": [...]}.

template <class R>
ordered_json scalar_to_json(const R& v) { return RingTraits<R>::str(v); }

inline ordered_json scalar_to_json(const Laurent& v) {
  ordered_json j;
  j["shift"] = v.lo();
  j["coeffs"] = ordered_json::array();
  for (const Int& c : v.coeffs()) j["coeffs"].push_back(c.get_str());
  return j;
}

inline ordered_json scalar_to_json(const BiPoly& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : v.terms()) terms.push_back({t.dt, t.dh, t.c.get_str()});
  return terms;
}

template <class R>
ordered_json matrix_to_json(const Matrix<R>& m) {
  ordered_json j;
  j["n"] = m.order();
  j["ring"] = RingTraits<R>::name;
  j["rows"] = ordered_json::array();
  for (int i = 0; i < m.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < m.order(); ++k) row.push_back(scalar_to_json(m(i, k)));
    j["rows"].push_back(row);
  }
  return j;
}

inline Matrix<Int> int_matrix_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  Matrix<Int> m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = int_from_json(j.at("rows").at(i).at(k));
  return m;
}

/// CSV: one row per line, entries as decimal strings.
template <class R>
std::string matrix_to_csv(const Matrix<R>& m) {
  std::string out;
  for (int i = 0; i < m.order(); ++i) {
    for (int k = 0; k < m.order(); ++k) out += (k ? "," : "") + RingTraits<R>::str(m(i, k));
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multigraphs.  {"nodes": [[...]], "mult": [[...]]}

inline ordered_json multigraph_to_json(const Multigraph& g) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (const Cell& c : g.nodes) j["nodes"].push_back(c.atoms());
  j["mult"] = ordered_json::array();
  for (int i = 0; i < g.mult.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < g.mult.order(); ++k) row.push_back(g.mult(i, k).get_si());
    j["mult"].push_back(row);
  }
  return j;
}

inline Multigraph multigraph_from_json(const json& j) {
  Multigraph g;
  for (const auto& arr : j.at("nodes")) {
    std::vector<int> atoms;
    for (const auto& a : arr) atoms.push_back(a.get<int>());
    g.nodes.emplace_back(std::move(atoms));
  }
  const int n = static_cast<int>(g.nodes.size());
  g.mult = Matrix<Int>(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) g.mult(i, k) = Int(j.at("mult").at(i).at(k).get<long>());
  return g;
}

// ---------------------------------------------------------------------------
// Reports.

inline ordered_json report_to_json(const Report& rep) {
  ordered_json j;
  j["subject"] = rep.subject;
  j["checks"] = ordered_json::array();
  for (const CheckResult& c : rep.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["pass"] = c.pass;
    if (!c.expected.empty()) cj["expected"] = c.expected;
    if (!c.got.empty()) cj["got"] = c.got;
    if (!c.note.empty()) cj["note"] = c.note;
    j["checks"].push_back(cj);
  }
  j["pass"] = !rep.any_failed();
  return j;
}

// ---------------------------------------------------------------------------
// Files.

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Loads a system from JSON or the plain-text format depending on content.
inline SetSystem load_system(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return system_from_json(json::parse(text));
  return system_from_text(text);
}

}  // namespace encon
