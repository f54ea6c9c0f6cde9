#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace encon {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // normalized rational, denominator > 0

/**
 * Uniform access to the scalar rings used by the exact matrix code.  Every
 * ring provides zero/one, equality, +,-,*, and exact division that either
 * succeeds exactly or reports failure.
 */
template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
  static constexpr const char* name = "int";
  static constexpr bool numeric = true;  // convertible to double
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static Int from_long(long v) { return Int(v); }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static std::optional<Int> exact_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw std::domain_error("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static double to_double(const Int& a) { return a.get_d(); }
  static std::string str(const Int& a) { return a.get_str(); }
};

template <>
struct RingTraits<Rat> {
  static constexpr const char* name = "rat";
  static constexpr bool numeric = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long v) { return Rat(v); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static std::optional<Rat> exact_div(const Rat& a, const Rat& b) {
    if (sgn(b) == 0) throw std::domain_error("exact_div: division by zero");
    return Rat(a / b);
  }
  static double to_double(const Rat& a) { return a.get_d(); }
  static std::string str(const Rat& a) { return a.get_str(); }
};

inline Rat rat_of(const Int& a) { return Rat(a); }

/// Parse "p" or "p/q" into a normalized rational.
inline Rat parse_rat(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

}  // namespace encon
