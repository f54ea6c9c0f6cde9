#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "encon/bundle.hpp"
#include "encon/matrix.hpp"
#include "encon/report.hpp"
#include "encon/spectra.hpp"

namespace encon {

/**
 * Multigraph on the cells of a system: mult(x,y) parallel edges between x
 * and y, diagonal entries rendered as that many loops.
 */
struct Multigraph {
  std::vector<Cell> nodes;
  Matrix<Int> mult;
};

/// The pair (Gamma--, Gamma++) whose adjacency matrices are L-- and L++.
/// Multiplicities must come out non-negative, which constant energy 1
/// guarantees.
inline std::pair<Multigraph, Multigraph> multigraphs_from(const SetSystem& s,
                                                          const Energy<Int>& h) {
  Matrix<Int> lmm(s.size()), lpp(s.size());
  detail::build_homoclinic(s, h, &lmm, &lpp);
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (sgn(lmm(i, j)) < 0 || sgn(lpp(i, j)) < 0)
        throw std::invalid_argument("multigraphs_from: negative multiplicity");
  return {Multigraph{s.cells(), std::move(lmm)}, Multigraph{s.cells(), std::move(lpp)}};
}

inline std::pair<Multigraph, Multigraph> multigraphs_from(const SetSystem& s) {
  return multigraphs_from(s, constant_energy(s, Int(1)));
}

inline std::string dot_node_name(const Cell& c) {
  return "\"s" + c.str() + "\"";
}

/// Undirected DOT, one edge line per multiplicity unit, diagonal d as d
/// loops.  Node order follows the system order, so output is byte-stable.
inline std::string export_dot(const Multigraph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (const Cell& c : g.nodes) out += "  " + dot_node_name(c) + ";\n";
  const int n = g.mult.order();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const long m = g.mult(i, j).get_si();
      for (long k = 0; k < m; ++k)
        out += "  " + dot_node_name(g.nodes[static_cast<std::size_t>(i)]) + " -- " +
               dot_node_name(g.nodes[static_cast<std::size_t>(j)]) + ";\n";
    }
  out += "}\n";
  return out;
}

/// tr(A^k) for k = 1..kmax: closed-walk counts of each length.
inline std::vector<Int> closed_walk_counts(const Multigraph& g, int kmax) {
  std::vector<Int> out;
  Matrix<Int> p = g.mult;
  for (int k = 1; k <= kmax; ++k) {
    out.push_back(trace(p));
    if (k < kmax) p = mat_mul(p, g.mult);
  }
  return out;
}

/// Charpoly coefficient symmetry p_k = +-p_{n-k} for the adjacency matrix.
inline Report path_symmetry_check(const Multigraph& g) {
  Report rep;
  rep.subject = "walk coefficient symmetry";
  const PalindromeClass pc = palindrome_class(charpoly_exact(g.mult));
  rep.add({"charpoly coefficients symmetric", true, pc != PalindromeClass::Neither,
           "palindromic or anti-palindromic", to_string(pc), ""});
  return rep;
}

}  // namespace encon
