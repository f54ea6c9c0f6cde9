#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/rings.hpp"

namespace encon {

/**
 * Laurent polynomial in one variable t with Int coefficients: a finite list
 * of coefficients starting at power `lo`, which may be negative.  Normalized
 * so the first and last stored coefficients are non-zero; zero is the empty
 * list with lo = 0.
 */
class Laurent {
 public:
  Laurent() = default;
  Laurent(long v) {  // NOLINT  implicit from constants
    if (v != 0) c_ = {Int(v)};
  }
  explicit Laurent(const Int& v) {
    if (sgn(v) != 0) c_ = {v};
  }
  Laurent(long lo, std::vector<Int> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    normalize();
  }

  static Laurent variable() { return Laurent(1, {Int(1)}); }  // t
  static Laurent monomial(const Int& coeff, long power) {
    return Laurent(power, {coeff});
  }

  bool is_zero() const { return c_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(long power) const {
    if (is_zero() || power < lo_ || power > hi()) return Int(0);
    return c_[static_cast<std::size_t>(power - lo_)];
  }

  bool operator==(const Laurent& other) const {
    return lo_ == other.lo_ && c_ == other.c_;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (Int& x : r.c_) x = -x;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.lo_, b.lo_);
    const long hi = std::max(a.hi(), b.hi());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (long p = a.lo_; p <= a.hi(); ++p) c[static_cast<std::size_t>(p - lo)] += a.coeff(p);
    for (long p = b.lo_; p <= b.hi(); ++p) c[static_cast<std::size_t>(p - lo)] += b.coeff(p);
    return Laurent(lo, std::move(c));
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Laurent(a.lo_ + b.lo_, std::move(c));
  }

  /// Exact division; nullopt when the quotient is not a Laurent polynomial.
  static std::optional<Laurent> divide(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("Laurent: division by zero");
    if (a.is_zero()) return Laurent();
    // Divide coefficient lists as ordinary polynomials from the top degree;
    // the power offset is handled by the lo bookkeeping.
    std::vector<Int> rem = a.c_;
    const std::vector<Int>& div = b.c_;
    if (rem.size() < div.size()) return std::nullopt;
    std::vector<Int> quot(rem.size() - div.size() + 1, Int(0));
    for (std::size_t step = quot.size(); step-- > 0;) {
      const Int& lead = rem[step + div.size() - 1];
      if (sgn(lead) == 0) continue;
      auto q = RingTraits<Int>::exact_div(lead, div.back());
      if (!q) return std::nullopt;
      quot[step] = *q;
      for (std::size_t j = 0; j < div.size(); ++j)
        rem[step + j] -= *q * div[j];
    }
    for (const Int& r : rem)
      if (sgn(r) != 0) return std::nullopt;
    return Laurent(a.lo_ - b.lo_, std::move(quot));
  }

  /// Substitute a value for t; t must be invertible if negative powers occur.
  Rat eval(const Rat& t) const {
    Rat acc(0);
    if (is_zero()) return acc;
    if (lo_ < 0 && sgn(t) == 0) throw std::domain_error("Laurent: eval at 0 with negative powers");
    for (long p = lo_; p <= hi(); ++p) {
      Rat term(coeff(p));
      for (long k = 0; k < (p >= 0 ? p : -p); ++k) term = (p >= 0) ? Rat(term * t) : Rat(term / t);
      acc += term;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (long p = hi(); p >= lo_; --p) {
      const Int& a = coeff(p);
      if (sgn(a) == 0) continue;
      if (!s.empty()) s += (sgn(a) > 0 ? "+" : "");
      if (p == 0) {
        s += a.get_str();
      } else {
        if (a == 1) {
        } else if (a == -1) {
          s += "-";
        } else {
          s += a.get_str() + "*";
        }
        s += "t";
        if (p != 1) s += "^" + std::to_string(p);
      }
    }
    return s;
  }

 private:
  void normalize() {
    std::size_t first = 0, last = c_.size();
    while (first < last && sgn(c_[first]) == 0) ++first;
    while (last > first && sgn(c_[last - 1]) == 0) --last;
    if (first == last) {
      c_.clear();
      lo_ = 0;
      return;
    }
    lo_ += static_cast<long>(first);
    c_ = std::vector<Int>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                          c_.begin() + static_cast<std::ptrdiff_t>(last));
  }

  long lo_ = 0;
  std::vector<Int> c_;
};

template <>
struct RingTraits<Laurent> {
  static constexpr const char* name = "laurent";
  static constexpr bool numeric = false;
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  static Laurent from_long(long v) { return Laurent(v); }
  static bool is_zero(const Laurent& a) { return a.is_zero(); }
  static std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b) {
    return Laurent::divide(a, b);
  }
  static std::string str(const Laurent& a) { return a.str(); }
};

}  // namespace encon
