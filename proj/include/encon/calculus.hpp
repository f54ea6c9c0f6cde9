#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/bundle.hpp"
#include "encon/energy.hpp"
#include "encon/matrix.hpp"
#include "encon/report.hpp"
#include "encon/set_system.hpp"

namespace encon {

template <class R>
struct EnergizedSystem {
  SetSystem system;
  Energy<R> energy;
};

// ---------------------------------------------------------------------------
// Curvature: every cell distributes its energy equally over the atoms of the
// system it contains; the curvatures then add back up to the total energy.

inline std::map<int, Rat> curvature(const SetSystem& s, const Energy<Rat>& h) {
  if (s.has_empty_cell()) throw std::invalid_argument("curvature: empty cell present");
  const std::vector<Cell> at = atoms(s);
  std::map<int, Rat> k;  // keyed by atom index into `at`
  for (std::size_t a = 0; a < at.size(); ++a) k[static_cast<int>(a)] = Rat(0);
  for (int i = 0; i < s.size(); ++i) {
    std::vector<int> inside;
    for (std::size_t a = 0; a < at.size(); ++a)
      if (at[a].subset_of(s.cell(i))) inside.push_back(static_cast<int>(a));
    if (inside.empty())
      throw std::logic_error("curvature: cell without atoms");  // cannot happen
    const Rat share = Rat(h.at(i)) / Rat(static_cast<long>(inside.size()));
    for (int a : inside) k[a] += share;
  }
  return k;
}

inline std::map<int, Rat> curvature(const SetSystem& s, const Energy<Int>& h) {
  std::vector<Rat> v;
  for (const Int& x : h.values) v.emplace_back(x);
  return curvature(s, explicit_energy(s, std::move(v)));
}

template <class R>
Report verify_gauss_bonnet(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "curvature";
  const auto k = curvature(s, h);
  Rat sum(0);
  for (const auto& [a, v] : k) sum += v;
  Rat total(0);
  for (const R& v : h.values) total += Rat(v);
  rep.add({"sum of curvatures = E[G]", true, sum == total, total.get_str(), sum.get_str(), ""});
  return rep;
}

// ---------------------------------------------------------------------------
// Index sums: credit each cell to its phi-largest atom; the indices then
// partition the total energy.

template <class R>
std::map<int, R> index_sums(const SetSystem& s, const Energy<R>& h,
                            const std::map<int, double>& phi_by_atom_index) {
  if (s.has_empty_cell()) throw std::invalid_argument("index_sums: empty cell present");
  const std::vector<Cell> at = atoms(s);
  {
    std::map<double, int> seen;
    for (const auto& [a, v] : phi_by_atom_index)
      if (!seen.emplace(v, a).second)
        throw std::invalid_argument("index_sums: phi must be injective on atoms");
  }
  std::map<int, R> idx;
  for (std::size_t a = 0; a < at.size(); ++a) idx[static_cast<int>(a)] = RingTraits<R>::zero();
  for (int i = 0; i < s.size(); ++i) {
    int best = -1;
    for (std::size_t a = 0; a < at.size(); ++a) {
      if (!at[a].subset_of(s.cell(i))) continue;
      if (best < 0 || phi_by_atom_index.at(static_cast<int>(a)) > phi_by_atom_index.at(best))
        best = static_cast<int>(a);
    }
    if (best < 0) throw std::logic_error("index_sums: cell without atoms");
    idx[best] = idx[best] + h.at(i);
  }
  return idx;
}

/// phi(atom k) = k: the default linear order on the atom list.
template <class R>
std::map<int, R> index_sums(const SetSystem& s, const Energy<R>& h) {
  std::map<int, double> phi;
  const std::vector<Cell> at = atoms(s);
  for (std::size_t a = 0; a < at.size(); ++a) phi[static_cast<int>(a)] = static_cast<double>(a);
  return index_sums(s, h, phi);
}

template <class R>
Report verify_index_sum(const SetSystem& s, const Energy<R>& h,
                        const std::map<int, double>& phi) {
  Report rep;
  rep.subject = "index sums";
  const auto idx = index_sums(s, h, phi);
  R sum = RingTraits<R>::zero();
  for (const auto& [a, v] : idx) sum = sum + v;
  const R total = total_energy(h);
  rep.add({"sum of indices = E[G]", true, sum == total, RingTraits<R>::str(total),
           RingTraits<R>::str(sum), ""});
  return rep;
}

// ---------------------------------------------------------------------------
// Sum and product of energized systems.

/// Disjoint union; the second system's atoms are shifted into a fresh range.
template <class R>
EnergizedSystem<R> disjoint_union(const EnergizedSystem<R>& a, const EnergizedSystem<R>& b) {
  int shift = 0;
  for (int g : a.system.ground()) shift = std::max(shift, g + 1);
  std::vector<Cell> cells = a.system.cells();
  for (const Cell& c : b.system.cells()) {
    std::vector<int> atoms;
    for (int x : c.atoms()) atoms.push_back(x + shift);
    cells.emplace_back(std::move(atoms));
  }
  std::vector<R> values = a.energy.values;
  values.insert(values.end(), b.energy.values.begin(), b.energy.values.end());
  SetSystem sys(std::move(cells));
  return {sys, explicit_energy(sys, std::move(values))};
}

/// Pairing of atom labels used by the Cartesian product; injective for
/// non-negative atoms.
inline int pair_atom(int a, int b, int bstride) { return a * bstride + b; }

/**
 * Cartesian product: cells are products x * y re-encoded through a pairing
 * of atom labels, ordered pair-lexicographically (A-major) so the connection
 * matrices factor as Kronecker products.  Energy multiplies.  The product of
 * simplicial complexes is generally not simplicial.
 */
template <class R>
EnergizedSystem<R> cartesian_product(const EnergizedSystem<R>& a, const EnergizedSystem<R>& b) {
  int bstride = 1;
  for (int g : b.system.ground()) bstride = std::max(bstride, g + 1);
  std::vector<Cell> cells;
  std::vector<R> values;
  for (int i = 0; i < a.system.size(); ++i)
    for (int j = 0; j < b.system.size(); ++j) {
      std::vector<int> atoms;
      for (int x : a.system.cell(i).atoms())
        for (int y : b.system.cell(j).atoms()) atoms.push_back(pair_atom(x, y, bstride));
      cells.emplace_back(std::move(atoms));
      values.push_back(a.energy.at(i) * b.energy.at(j));
    }
  SetSystem sys(std::move(cells));
  return {sys, explicit_energy(sys, std::move(values))};
}

/// L--(A*B) = L--(A) (x) L--(B) and the same for L++, exactly.
template <class R>
Report verify_tensor_representation(const EnergizedSystem<R>& a, const EnergizedSystem<R>& b) {
  Report rep;
  rep.subject = "tensor factorization";
  const auto prod = cartesian_product(a, b);
  const auto ba = build_bundle(a.system, a.energy);
  const auto bb = build_bundle(b.system, b.energy);
  const auto bp = build_bundle(prod.system, prod.energy);
  rep.add({"L--(A*B) = L--(A) (x) L--(B)", true, bp.lmm == tensor_product(ba.lmm, bb.lmm), "", "", ""});
  rep.add({"L++(A*B) = L++(A) (x) L++(B)", true, bp.lpp == tensor_product(ba.lpp, bb.lpp), "", "", ""});
  const R ea = total_energy(a.energy), eb = total_energy(b.energy);
  const R ep = total_energy(prod.energy);
  rep.add({"E[A*B] = E[A] E[B]", true, ep == R(ea * eb), RingTraits<R>::str(R(ea * eb)),
           RingTraits<R>::str(ep), ""});
  return rep;
}

}  // namespace encon
