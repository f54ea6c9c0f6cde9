#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "encon/bipoly.hpp"
#include "encon/bundle.hpp"
#include "encon/energy.hpp"
#include "encon/laurent.hpp"
#include "encon/matrix.hpp"
#include "encon/report.hpp"
#include "encon/set_system.hpp"

namespace encon {

/// f(t) = 1 + sum_k (#cells of cardinality k) t^k for a collection of cells.
inline Laurent f_poly(const std::vector<Cell>& cells) {
  std::vector<Int> counts{Int(1)};
  for (const Cell& c : cells) {
    const std::size_t k = static_cast<std::size_t>(c.cardinality());
    if (counts.size() <= k) counts.resize(k + 1, Int(0));
    counts[k] += 1;
  }
  return Laurent(0, std::move(counts));
}

inline Laurent f_poly(const SetSystem& s) { return f_poly(s.cells()); }

/// Which closed form the rational connection matrix uses:
///   Quotient:  L_t(x,y) = 1 - f(t)/t^{|x n y|}
///   Prefactor: L_t(x,y) = t^{1-|x n y|} (1 - f(t))
/// with f the f-polynomial of the cells inside both x and y.  Quotient is
/// the form whose product with g_t is the identity; Prefactor is kept for
/// comparison.
enum class LtVariant { Quotient, Prefactor };

/**
 * Parametrized bundle of a simplicial complex: g_t is polynomial in t,
 * L_t is Laurent in t, and g_t * L_t = I as rational functions.  The cell
 * energy behind it is h_t(x) = -t^{|x|}, so E[A] = 1 - f_A(t).
 */
struct ParamBundle {
  SetSystem system;
  Matrix<Laurent> lt;
  Matrix<Laurent> gt;
};

inline ParamBundle build_param(const SetSystem& s, LtVariant variant = LtVariant::Quotient) {
  if (!s.simplicial())
    throw std::invalid_argument("build_param: system must be a simplicial complex");
  const int n = s.size();
  ParamBundle pb{s, Matrix<Laurent>(n), Matrix<Laurent>(n)};
  const Laurent one(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cell& x = s.cell(i);
      const Cell& y = s.cell(j);
      std::vector<Cell> wm, wp;
      for (const Cell& z : s.cells()) {
        if (z.subset_of(x) && z.subset_of(y)) wm.push_back(z);
        if (x.subset_of(z) && y.subset_of(z)) wp.push_back(z);
      }
      const Laurent gxy = one - f_poly(wp);
      pb.gt(i, j) = (x.omega() * y.omega() > 0) ? gxy : -gxy;
      const long k = intersect(x, y).cardinality();
      if (variant == LtVariant::Quotient) {
        pb.lt(i, j) = one - f_poly(wm) * Laurent::monomial(Int(1), -k);
      } else {
        pb.lt(i, j) = Laurent::monomial(Int(1), 1 - k) * (one - f_poly(wm));
      }
    }
  return pb;
}

/// g_t * L_t = I as an exact identity of Laurent polynomials.
inline Report verify_green_star(const SetSystem& s) {
  Report rep;
  rep.subject = "parametrized inverse";
  const ParamBundle pb = build_param(s);
  const bool ok = mat_mul(pb.gt, pb.lt) == Matrix<Laurent>::identity(s.size());
  rep.add({"g_t * L_t = I", true, ok, "identity", ok ? "identity" : "mismatch", ""});
  return rep;
}

/// Sum of the entries of g_t and tr(S g_t) both equal 1 - f_G(t).
inline Report verify_param_energy(const SetSystem& s) {
  Report rep;
  rep.subject = "parametrized energy";
  const ParamBundle pb = build_param(s);
  const Laurent target = Laurent(1) - f_poly(s);
  Laurent sum;
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) sum = sum + pb.gt(i, j);
  rep.add({"sum g_t(x,y) = 1 - f_G(t)", true, sum == target, target.str(), sum.str(), ""});
  Laurent st;
  for (int i = 0; i < s.size(); ++i) {
    const Laurent d = pb.gt(i, i);
    st = st + (s.cell(i).omega() > 0 ? d : -d);
  }
  rep.add({"tr(S g_t) = 1 - f_G(t)", true, st == target, target.str(), st.str(), ""});
  return rep;
}

/// det(g_t) = (-1)^n t^(sum |x|) and det(L_t) its reciprocal monomial.
inline Report verify_param_det(const SetSystem& s) {
  Report rep;
  rep.subject = "parametrized determinant";
  const ParamBundle pb = build_param(s);
  long total_card = 0;
  for (const Cell& c : s.cells()) total_card += c.cardinality();
  const int n = s.size();
  const Laurent want_g = Laurent::monomial(Int(n % 2 == 0 ? 1 : -1), total_card);
  const Laurent want_l = Laurent::monomial(Int(n % 2 == 0 ? 1 : -1), -total_card);
  const Laurent dg = det_exact(pb.gt);
  const Laurent dl = det_exact(pb.lt);
  rep.add({"det(g_t) = (-1)^n t^(sum |x|)", true, dg == want_g, want_g.str(), dg.str(), ""});
  rep.add({"det(L_t) = 1/det(g_t)", true, dl == want_l && dg * dl == Laurent(1), want_l.str(),
           dl.str(), ""});
  return rep;
}

/// Substitute a numeric value for t.
inline Matrix<Rat> eval_param(const Matrix<Laurent>& m, const Rat& t) {
  Matrix<Rat> out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out(i, j) = m(i, j).eval(t);
  return out;
}

// ---------------------------------------------------------------------------
// Two-parameter deformation: the last cell carries energy H and its column
// is throttled by T.

enum class Homoclinic { MinusMinus, PlusPlus };

/// Bundle matrix over Z[T,H] with h(last) = H, h = 1 elsewhere, and the last
/// column (corner included) scaled by T.  The last cell must be maximal.
inline Matrix<BiPoly> deform_throttled(const SetSystem& s, Homoclinic which) {
  const int n = s.size();
  if (n == 0) throw std::invalid_argument("deform_throttled: empty system");
  const Cell& last = s.cell(n - 1);
  for (int i = 0; i + 1 < n; ++i)
    if (last.subset_of(s.cell(i)))
      throw std::invalid_argument("deform_throttled: last cell must be maximal");
  std::vector<BiPoly> values(static_cast<std::size_t>(n), BiPoly(1));
  values.back() = BiPoly::var_h();
  const Energy<BiPoly> h = explicit_energy(s, std::move(values));
  Matrix<BiPoly> m(n);
  if (which == Homoclinic::MinusMinus)
    detail::build_homoclinic(s, h, &m, static_cast<Matrix<BiPoly>*>(nullptr));
  else
    detail::build_homoclinic(s, h, static_cast<Matrix<BiPoly>*>(nullptr), &m);
  const BiPoly t = BiPoly::var_t();
  for (int i = 0; i < n; ++i) m(i, n - 1) = m(i, n - 1) * t;
  return m;
}

/// Coefficients of det(A + lambda I) by ascending powers of lambda, i.e. the
/// minor sums read from the determinant end.
template <class R>
std::vector<R> charpoly_ascending_signed(const Matrix<R>& a) {
  std::vector<R> e = principal_minor_sums(charpoly_exact(a));
  return std::vector<R>(e.rbegin(), e.rend());
}

struct DeformationData {
  Matrix<BiPoly> lmm, lpp;
  std::vector<BiPoly> p, q;  // coefficient lists of the two charpolys
};

inline DeformationData deformation_data(const SetSystem& s) {
  DeformationData d;
  d.lmm = deform_throttled(s, Homoclinic::MinusMinus);
  d.lpp = deform_throttled(s, Homoclinic::PlusPlus);
  d.p = charpoly_ascending_signed(d.lmm);
  d.q = charpoly_ascending_signed(d.lpp);
  return d;
}

inline std::vector<Int> eval_coeff_list(const std::vector<BiPoly>& v, const Int& t, const Int& h) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (const BiPoly& c : v) out.push_back(c.eval(t, h));
  return out;
}

inline bool palindromic_list(const std::vector<Int>& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != v[v.size() - 1 - k]) return false;
  return true;
}

inline Report verify_deformation(const SetSystem& s) {
  Report rep;
  rep.subject = "throttled deformation";
  const DeformationData d = deformation_data(s);

  bool multi = true;
  for (const BiPoly& c : d.p) multi = multi && c.multilinear();
  for (const BiPoly& c : d.q) multi = multi && c.multilinear();
  rep.add({"coefficients multilinear in T and H", true, multi, "", "", ""});

  bool swapped = d.p.size() == d.q.size();
  for (std::size_t k = 0; swapped && k < d.p.size(); ++k)
    swapped = d.q[k] == d.p[k].swap_vars();
  rep.add({"q(T,H) = p(H,T)", true, swapped, "", "", ""});

  const auto at11 = eval_coeff_list(d.p, Int(1), Int(1));
  rep.add({"palindromic at (T,H) = (1,1)", true, palindromic_list(at11), "", "", ""});

  auto at00 = eval_coeff_list(d.p, Int(0), Int(0));
  const bool shifted = !at00.empty() && sgn(at00.front()) == 0 &&
                       palindromic_list(std::vector<Int>(at00.begin() + 1, at00.end()));
  rep.add({"shifted palindrome at (T,H) = (0,0)", true, shifted, "", "", ""});
  return rep;
}

}  // namespace encon
