#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/energy.hpp"
#include "encon/matrix.hpp"
#include "encon/report.hpp"
#include "encon/set_system.hpp"

namespace encon {

namespace detail {

/// Cells as fixed-width bitmasks over the ground set, for fast subset tests.
struct MaskTable {
  int words = 0;
  std::vector<std::uint64_t> bits;  // n * words

  explicit MaskTable(const SetSystem& s) {
    std::map<int, int> pos;
    for (int a : s.ground()) {
      const int p = static_cast<int>(pos.size());
      pos[a] = p;
    }
    words = std::max(1, (static_cast<int>(pos.size()) + 63) / 64);
    bits.assign(static_cast<std::size_t>(s.size()) * words, 0);
    for (int i = 0; i < s.size(); ++i)
      for (int a : s.cell(i).atoms()) {
        const int p = pos.at(a);
        bits[static_cast<std::size_t>(i) * words + p / 64] |= 1ULL << (p % 64);
      }
  }

  const std::uint64_t* mask(int i) const { return &bits[static_cast<std::size_t>(i) * words]; }

  static bool subset(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int k = 0; k < w; ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  }
};

}  // namespace detail

/**
 * The six matrices of an energized system, in the system's listed cell
 * order:
 *   lmm(x,y) = E[W-(x) n W-(y)]   (cells contained in both x and y)
 *   lpp(x,y) = E[W+(x) n W+(y)]   (cells containing both x and y)
 *   lpm(x,y) = E[W+(x) n W-(y)],  lmp = lpm^T
 *   smat     = diag(omega), green = smat * lpp * smat.
 */
template <class R>
struct ConnectionBundle {
  SetSystem system;
  Energy<R> energy;
  Matrix<R> lmm, lpp, lpm, lmp, smat, green;
};

namespace detail {

/// lmm(x,y) sums h over cells inside x n y; lpp(x,y) over cells outside
/// x u y.  Both are memoized on the intersection/union mask, which keeps the
/// construction near-linear for the big regular systems.
template <class R>
void build_homoclinic(const SetSystem& s, const Energy<R>& h, Matrix<R>* lmm,
                      Matrix<R>* lpp) {
  const int n = s.size();
  const MaskTable mt(s);
  const int w = mt.words;
  std::map<std::vector<std::uint64_t>, R> down, up;
  std::vector<std::uint64_t> key(static_cast<std::size_t>(w));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (lmm) {
        for (int k = 0; k < w; ++k) key[static_cast<std::size_t>(k)] = mt.mask(i)[k] & mt.mask(j)[k];
        auto it = down.find(key);
        if (it == down.end()) {
          R acc = RingTraits<R>::zero();
          for (int c = 0; c < n; ++c)
            if (MaskTable::subset(mt.mask(c), key.data(), w)) acc = acc + h.at(c);
          it = down.emplace(key, std::move(acc)).first;
        }
        (*lmm)(i, j) = it->second;
        (*lmm)(j, i) = it->second;
      }
      if (lpp) {
        for (int k = 0; k < w; ++k) key[static_cast<std::size_t>(k)] = mt.mask(i)[k] | mt.mask(j)[k];
        auto it = up.find(key);
        if (it == up.end()) {
          R acc = RingTraits<R>::zero();
          for (int c = 0; c < n; ++c)
            if (MaskTable::subset(key.data(), mt.mask(c), w)) acc = acc + h.at(c);
          it = up.emplace(key, std::move(acc)).first;
        }
        (*lpp)(i, j) = it->second;
        (*lpp)(j, i) = it->second;
      }
    }
  }
}

}  // namespace detail

/// Just L--; cheaper than the full bundle when the rest is not needed.
template <class R>
Matrix<R> connection_lmm(const SetSystem& s, const Energy<R>& h) {
  Matrix<R> lmm(s.size());
  detail::build_homoclinic(s, h, &lmm, static_cast<Matrix<R>*>(nullptr));
  return lmm;
}

template <class R>
Matrix<R> connection_lpp(const SetSystem& s, const Energy<R>& h) {
  Matrix<R> lpp(s.size());
  detail::build_homoclinic(s, h, static_cast<Matrix<R>*>(nullptr), &lpp);
  return lpp;
}

template <class R>
ConnectionBundle<R> build_bundle(const SetSystem& s, const Energy<R>& h) {
  if (static_cast<int>(h.values.size()) != s.size())
    throw std::invalid_argument("build_bundle: energy not aligned with system");
  const int n = s.size();
  ConnectionBundle<R> b{s, h, Matrix<R>(n), Matrix<R>(n), Matrix<R>(n),
                        Matrix<R>(n), Matrix<R>(n), Matrix<R>(n)};
  detail::build_homoclinic(s, h, &b.lmm, &b.lpp);

  // Heteroclinic: lpm(x,y) sums h over cells z with x <= z <= y.
  const detail::MaskTable mt(s);
  const int w = mt.words;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!detail::MaskTable::subset(mt.mask(i), mt.mask(j), w)) continue;
      R acc = RingTraits<R>::zero();
      for (int c = 0; c < n; ++c)
        if (detail::MaskTable::subset(mt.mask(i), mt.mask(c), w) &&
            detail::MaskTable::subset(mt.mask(c), mt.mask(j), w))
          acc = acc + h.at(c);
      b.lpm(i, j) = std::move(acc);
    }
  b.lmp = transpose(b.lpm);

  for (int i = 0; i < n; ++i)
    b.smat(i, i) = RingTraits<R>::from_long(s.cell(i).omega());
  b.green = mat_mul(mat_mul(b.smat, b.lpp), b.smat);
  return b;
}

/// W[G] = sum of the entries of S * L-- * S.
template <class R>
R wu_sum(const SetSystem& s, const Energy<R>& h) {
  const Matrix<R> lmm = connection_lmm(s, h);
  R acc = RingTraits<R>::zero();
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      R term = RingTraits<R>::from_long(s.cell(i).omega() * s.cell(j).omega()) * lmm(i, j);
      acc = acc + term;
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Identity verification.  Each verifier computes both sides exactly and
// returns a structured report; theorems whose hypotheses do not hold for the
// input are reported as not applicable but still evaluated informationally.

namespace detail {

inline std::string na_note(const SetSystem& s) {
  if (s.has_empty_cell()) return "system contains the empty cell; evaluated informationally";
  if (!s.simplicial()) return "system is not a simplicial complex; evaluated informationally";
  return "";
}

}  // namespace detail

/**
 * L-- * g is lower triangular with diagonal h(x)^2 when the system is a
 * canonically ordered simplicial complex.  Strictly-lower entries are listed
 * in the report note without being asserted.
 */
template <class R>
Report verify_product(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "product L*g";
  const bool applicable = s.simplicial() && s.canonically_ordered() && !s.has_empty_cell();
  const auto b = build_bundle(s, h);
  const Matrix<R> lg = mat_mul(b.lmm, b.green);
  const int n = s.size();

  bool upper_zero = true;
  for (int i = 0; i < n && upper_zero; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!RingTraits<R>::is_zero(lg(i, j))) {
        upper_zero = false;
        break;
      }
  bool diag_ok = true;
  for (int i = 0; i < n; ++i) {
    const R hh = h.at(i) * h.at(i);
    if (!(lg(i, i) == hh)) {
      diag_ok = false;
      break;
    }
  }
  std::string lower;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!RingTraits<R>::is_zero(lg(i, j))) {
        if (!lower.empty()) lower += ", ";
        lower += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + RingTraits<R>::str(lg(i, j));
      }
  CheckResult tri{"L*g lower triangular", applicable, upper_zero, "0 above diagonal", "", detail::na_note(s)};
  CheckResult dia{"diag(L*g) = h(x)^2", applicable, diag_ok, "h(x)^2", "", lower.empty() ? "" : "lower entries: " + lower};
  if (!applicable && !s.canonically_ordered() && s.simplicial())
    tri.note = "system is not canonically ordered; evaluated informationally";
  rep.add(std::move(tri));
  rep.add(std::move(dia));
  return rep;
}

/// det(L--) = det(L++) = det(g) = prod h(x), for arbitrary sets of sets.
/// For spin energies additionally checks unimodularity of all four matrices.
template <class R>
Report verify_determinant(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "determinants";
  const bool applicable = !s.has_empty_cell();
  const auto b = build_bundle(s, h);
  R prod = RingTraits<R>::one();
  for (const R& v : h.values) prod = prod * v;
  const R dmm = det_exact(b.lmm);
  const R dpp = det_exact(b.lpp);
  const R dg = det_exact(b.green);
  const bool ok = dmm == prod && dpp == prod && dg == prod;
  CheckResult c{"det(L--) = det(L++) = det(g) = prod h", applicable, ok,
                RingTraits<R>::str(prod),
                RingTraits<R>::str(dmm) + ", " + RingTraits<R>::str(dpp) + ", " + RingTraits<R>::str(dg),
                detail::na_note(s)};
  rep.add(std::move(c));
  if (is_spin(h)) {
    const R one = RingTraits<R>::one();
    auto unimodular = [&](const Matrix<R>& m) {
      const R d = det_exact(m);
      return d == one || d == R(-one);
    };
    const bool uni = unimodular(b.lmm) && unimodular(b.lpp) && unimodular(b.lpm) && unimodular(b.lmp);
    rep.add({"spin case: all four matrices unimodular", applicable, uni, "det in {-1,1}", "", ""});
  }
  return rep;
}

/// Spin energies: g is the exact inverse of L--.
template <class R>
Report verify_inverse_spin(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "spin inverse";
  if (!is_spin(h)) {
    rep.add_info("g*L = L*g = I", false, "", "", "energy is not spin-valued; skipped");
    return rep;
  }
  const bool applicable = !s.has_empty_cell();
  const auto b = build_bundle(s, h);
  const auto id = Matrix<R>::identity(s.size());
  const bool ok = mat_mul(b.green, b.lmm) == id && mat_mul(b.lmm, b.green) == id;
  std::string note = detail::na_note(s);
  if (!s.simplicial() && !s.has_empty_cell())
    note = "set of sets (not simplicial)";
  rep.add({"g*L = L*g = I", applicable, ok, "identity", ok ? "identity" : "mismatch", note});
  return rep;
}

/// Simplicial complexes: sum of all entries of g equals E[G], and each row
/// of g sums to omega(x) g(x,x).
template <class R>
Report verify_energy_theorem(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "potential energy";
  const bool applicable = s.simplicial() && !s.has_empty_cell();
  const auto b = build_bundle(s, h);
  const int n = s.size();
  R total = total_energy(h);
  R sum = RingTraits<R>::zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sum = sum + b.green(i, j);
  rep.add({"sum g(x,y) = E[G]", applicable, sum == total, RingTraits<R>::str(total),
           RingTraits<R>::str(sum), detail::na_note(s)});

  bool rows = true;
  for (int i = 0; i < n; ++i) {
    R rowsum = RingTraits<R>::zero();
    for (int j = 0; j < n; ++j) rowsum = rowsum + b.green(i, j);
    const R lhs = RingTraits<R>::from_long(s.cell(i).omega()) * b.green(i, i);
    if (!(rowsum == lhs)) {
      rows = false;
      break;
    }
  }
  rep.add({"row sums: sum_y g(x,y) = omega(x) g(x,x)", applicable, rows, "", "", detail::na_note(s)});
  return rep;
}

/// Simplicial complexes: tr(S*g) = E[G].
template <class R>
Report verify_strace(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "super trace";
  const bool applicable = s.simplicial() && !s.has_empty_cell();
  const auto b = build_bundle(s, h);
  R st = RingTraits<R>::zero();
  for (int i = 0; i < s.size(); ++i)
    st = st + RingTraits<R>::from_long(s.cell(i).omega()) * b.green(i, i);
  const R total = total_energy(h);
  rep.add({"tr(S*g) = E[G]", applicable, st == total, RingTraits<R>::str(total),
           RingTraits<R>::str(st), detail::na_note(s)});
  return rep;
}

/// The dual system, with energies carried through complementation, swaps the
/// two homoclinic matrices entry for entry.
template <class R>
Report verify_dual_swap(const SetSystem& s, const Energy<R>& h) {
  Report rep;
  rep.subject = "dual swap";
  const SetSystem d = boolean_dual(s);
  const Energy<R> hd{h.kind, h.values};  // same per-cell values, complemented cells
  const auto bs = build_bundle(s, h);
  const auto bd = build_bundle(d, hd);
  const bool ok = bd.lmm == bs.lpp && bd.lpp == bs.lmm;
  rep.add({"dual exchanges L-- and L++", true, ok, "", "", ""});
  return rep;
}

}  // namespace encon
