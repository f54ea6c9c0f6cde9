#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "encon/rings.hpp"

namespace encon {

/**
 * Polynomial with Int coefficients in two commuting variables T and H,
 * stored as a sorted sparse term list without zero coefficients.
 */
class BiPoly {
 public:
  struct Term {
    int dt = 0;
    int dh = 0;
    Int c;
    bool operator==(const Term&) const = default;
  };

  BiPoly() = default;
  BiPoly(long v) {  // NOLINT  implicit from constants
    if (v != 0) terms_ = {{0, 0, Int(v)}};
  }
  explicit BiPoly(const Int& v) {
    if (sgn(v) != 0) terms_ = {{0, 0, v}};
  }
  explicit BiPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  static BiPoly var_t() { return BiPoly({{1, 0, Int(1)}}); }
  static BiPoly var_h() { return BiPoly({{0, 1, Int(1)}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const BiPoly& other) const = default;

  BiPoly operator-() const {
    BiPoly r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<Term> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return BiPoly(std::move(out));
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& x : a.terms_)
      for (const Term& y : b.terms_)
        out.push_back({x.dt + y.dt, x.dh + y.dh, Int(x.c * y.c)});
    return BiPoly(std::move(out));
  }

  /// True when every term has degree <= 1 in T and <= 1 in H.
  bool multilinear() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.dt <= 1 && t.dh <= 1; });
  }

  BiPoly swap_vars() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) std::swap(t.dt, t.dh);
    return BiPoly(std::move(out));
  }

  Int eval(const Int& tv, const Int& hv) const {
    Int acc(0);
    for (const Term& t : terms_) {
      Int term = t.c;
      for (int i = 0; i < t.dt; ++i) term *= tv;
      for (int i = 0; i < t.dh; ++i) term *= hv;
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const Term& t : terms_) {
      std::string mono;
      if (t.dt) mono += "T" + (t.dt > 1 ? "^" + std::to_string(t.dt) : "");
      if (t.dh) mono += std::string(mono.empty() ? "" : "*") + "H" +
                        (t.dh > 1 ? "^" + std::to_string(t.dh) : "");
      std::string coef = t.c.get_str();
      if (!mono.empty() && coef == "1") coef.clear();
      if (!mono.empty() && coef == "-1") coef = "-";
      std::string piece = coef + (coef.empty() || mono.empty() || coef == "-" ? "" : "*") + mono;
      if (!s.empty() && piece[0] != '-') s += "+";
      s += piece;
    }
    return s;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return std::pair(a.dt, a.dh) < std::pair(b.dt, b.dh);
    });
    std::vector<Term> out;
    for (Term& t : terms_) {
      if (!out.empty() && out.back().dt == t.dt && out.back().dh == t.dh) {
        out.back().c += t.c;
        if (sgn(out.back().c) == 0) out.pop_back();
      } else if (sgn(t.c) != 0) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

template <>
struct RingTraits<BiPoly> {
  static constexpr const char* name = "bipoly";
  static constexpr bool numeric = false;
  static BiPoly zero() { return BiPoly(); }
  static BiPoly one() { return BiPoly(1); }
  static BiPoly from_long(long v) { return BiPoly(v); }
  static bool is_zero(const BiPoly& a) { return a.is_zero(); }
  static std::optional<BiPoly> exact_div(const BiPoly&, const BiPoly&) = delete;
  static std::string str(const BiPoly& a) { return a.str(); }
};

}  // namespace encon
