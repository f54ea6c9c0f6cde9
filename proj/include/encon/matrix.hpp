#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/rings.hpp"

namespace encon {

/**
 * Dense square matrix over one of the exact scalar rings.  All operations
 * are exact; nothing here touches floating point.
 */
template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), RingTraits<R>::zero()) {
    if (n < 0) throw std::invalid_argument("matrix order must be >= 0");
  }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }

  int order() const { return n_; }

  R& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const R& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool operator==(const Matrix& other) const = default;

  bool symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<R> a_;
};

// ---------------------------------------------------------------------------
// Arithmetic

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mat_mul: size mismatch");
  const int n = a.order();
  Matrix<R> c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const R& aik = a(i, k);
      if (RingTraits<R>::is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) c(i, j) = c(i, j) + aik * b(k, j);
    }
  return c;
}

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) { return mat_mul(a, b); }

template <class R>
Matrix<R> mat_add(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mat_add: size mismatch");
  Matrix<R> c(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class R>
Matrix<R> mat_sub(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mat_sub: size mismatch");
  Matrix<R> c(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
  Matrix<R> c(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) c(j, i) = a(i, j);
  return c;
}

template <class R>
R trace(const Matrix<R>& a) {
  R t = RingTraits<R>::zero();
  for (int i = 0; i < a.order(); ++i) t = t + a(i, i);
  return t;
}

template <class R>
Matrix<R> scalar_mul(const R& s, const Matrix<R>& a) {
  Matrix<R> c(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) c(i, j) = s * a(i, j);
  return c;
}

/// Kronecker product: entry ((i*m+k), (j*m+l)) = a(i,j) * b(k,l).
template <class R>
Matrix<R> tensor_product(const Matrix<R>& a, const Matrix<R>& b) {
  const int n = a.order(), m = b.order();
  Matrix<R> c(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) c(i * m + k, j * m + l) = a(i, j) * b(k, l);
  return c;
}

template <class R>
Matrix<R> mat_pow(const Matrix<R>& a, int e) {
  if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
  Matrix<R> acc = Matrix<R>::identity(a.order());
  for (int i = 0; i < e; ++i) acc = mat_mul(acc, a);
  return acc;
}

// ---------------------------------------------------------------------------
// Determinant: Bareiss fraction-free elimination.  Every division is exact in
// the entry ring (the Laurent case shifts powers of t through exact_div).

template <class R>
R det_exact(const Matrix<R>& a) {
  const int n = a.order();
  if (n == 0) return RingTraits<R>::one();
  Matrix<R> m = a;
  R prev = RingTraits<R>::one();
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (RingTraits<R>::is_zero(m(k, k))) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!RingTraits<R>::is_zero(m(r, k))) { piv = r; break; }
      if (piv < 0) return RingTraits<R>::zero();
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = RingTraits<R>::exact_div(num, prev);
        if (!q) throw std::domain_error("det_exact: non-exact division");
        m(i, j) = *q;
      }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return sign < 0 ? R(-d) : d;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial.
//
// charpoly_exact returns the coefficients of det(A - lambda*I) in descending
// powers of lambda; the leading coefficient is (-1)^n.  The Berkowitz scheme
// is division-free, so it works over every ring including the polynomial
// ones.

template <class R>
std::vector<R> charpoly_exact(const Matrix<R>& a) {
  const int n = a.order();
  // Berkowitz iteration over the leading principal submatrices.  `v` holds
  // the monic coefficients of det(lambda*I - A_m), descending.
  std::vector<R> v{RingTraits<R>::one()};
  for (int m = 1; m <= n; ++m) {
    // Toeplitz column: s0 = 1, s1 = -corner, s_{j} = -Row * A'^(j-2) * Col.
    std::vector<R> s(static_cast<std::size_t>(m) + 1, RingTraits<R>::zero());
    s[0] = RingTraits<R>::one();
    s[1] = -a(m - 1, m - 1);
    std::vector<R> w(static_cast<std::size_t>(m) - 1);
    for (int i = 0; i < m - 1; ++i) w[static_cast<std::size_t>(i)] = a(i, m - 1);
    for (int j = 2; j <= m; ++j) {
      R dot = RingTraits<R>::zero();
      for (int i = 0; i < m - 1; ++i) dot = dot + a(m - 1, i) * w[static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(j)] = -dot;
      if (j < m) {
        std::vector<R> w2(static_cast<std::size_t>(m) - 1, RingTraits<R>::zero());
        for (int i = 0; i < m - 1; ++i) {
          for (int k = 0; k < m - 1; ++k)
            w2[static_cast<std::size_t>(i)] = w2[static_cast<std::size_t>(i)] + a(i, k) * w[static_cast<std::size_t>(k)];
        }
        w = std::move(w2);
      }
    }
    std::vector<R> nv(static_cast<std::size_t>(m) + 1, RingTraits<R>::zero());
    for (std::size_t p = 0; p <= static_cast<std::size_t>(m); ++p)
      for (std::size_t q = 0; q < v.size() && q <= p; ++q)
        nv[p] = nv[p] + s[p - q] * v[q];
    v = std::move(nv);
  }
  if (n % 2 == 1)
    for (R& c : v) c = -c;  // det(A - x) = (-1)^n det(x - A)
  return v;
}

/// Faddeev-LeVerrier with exact integer divisions; Int and Rat entries only.
/// Used as an independent route to the same coefficients.
template <class R>
std::vector<R> charpoly_faddeev(const Matrix<R>& a) {
  const int n = a.order();
  std::vector<R> c(static_cast<std::size_t>(n) + 1, RingTraits<R>::zero());
  c[0] = RingTraits<R>::one();
  Matrix<R> m(n);  // starts at zero
  for (int k = 1; k <= n; ++k) {
    // M_k = A*(M_{k-1} + c_{k-1} I);  c_k = -tr(A*M_k)/k  (with M_1 = A).
    Matrix<R> t = m;
    for (int i = 0; i < n; ++i) t(i, i) = t(i, i) + c[static_cast<std::size_t>(k) - 1];
    m = mat_mul(a, t);
    R tr = trace(m);
    auto q = RingTraits<R>::exact_div(tr, RingTraits<R>::from_long(k));
    if (!q) throw std::domain_error("charpoly_faddeev: non-exact division");
    c[static_cast<std::size_t>(k)] = -*q;
  }
  if (n % 2 == 1)
    for (R& x : c) x = -x;
  return c;
}

/// Sums of k x k principal minors e_k, k = 0..n, recovered from the
/// charpoly: det(A - x) = (-1)^n sum_k (-1)^k e_k x^(n-k).
template <class R>
std::vector<R> principal_minor_sums(const std::vector<R>& charpoly_desc) {
  const int n = static_cast<int>(charpoly_desc.size()) - 1;
  std::vector<R> e(charpoly_desc.size());
  for (int k = 0; k <= n; ++k) {
    R v = charpoly_desc[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(k)] = ((n + k) % 2 == 0) ? v : R(-v);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Inverse.

/// Gauss-Jordan over the rationals.  Throws on singular input.
inline Matrix<Rat> inverse_field(const Matrix<Rat>& a) {
  const int n = a.order();
  Matrix<Rat> m = a;
  Matrix<Rat> inv = Matrix<Rat>::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (sgn(m(r, k)) != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    const Rat d = m(k, k);
    for (int j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || sgn(m(i, k)) == 0) continue;
      const Rat f = m(i, k);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Inverse via Cayley-Hamilton: A^{-1} = -(c_n I + c_{n-1} A + ...)/c_0 with
/// charpoly coefficients c.  Works over any ring in which the entries of the
/// adjugate are divisible by det(A); fails with domain_error otherwise.
template <class R>
Matrix<R> inverse_exact(const Matrix<R>& a) {
  const int n = a.order();
  if (n == 0) return a;
  std::vector<R> c = charpoly_exact(a);  // c[0] x^n ... c[n]
  const R det = c[static_cast<std::size_t>(n)];  // det(A - 0)
  if (RingTraits<R>::is_zero(det)) throw std::domain_error("inverse: singular matrix");
  // q(A) with q(x) = c[0] x^{n-1} + ... + c[n-1], by Horner.
  Matrix<R> acc(n);
  for (int i = 0; i < n; ++i) acc(i, i) = c[0];
  for (int k = 1; k <= n - 1; ++k) {
    acc = mat_mul(acc, a);
    for (int i = 0; i < n; ++i) acc(i, i) = acc(i, i) + c[static_cast<std::size_t>(k)];
  }
  Matrix<R> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto q = RingTraits<R>::exact_div(R(-acc(i, j)), det);
      if (!q) throw std::domain_error("inverse: entries not divisible by determinant");
      out(i, j) = *q;
    }
  return out;
}

inline Matrix<Rat> inverse_exact(const Matrix<Rat>& a) { return inverse_field(a); }

inline Matrix<Rat> to_rational(const Matrix<Int>& a) {
  Matrix<Rat> m(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m(i, j) = Rat(a(i, j));
  return m;
}

// ---------------------------------------------------------------------------
// Rank over the rationals.

namespace detail {

/// Rank of the matrix reduced mod a word-size prime.
inline int rank_mod_prime(const Matrix<Int>& a, std::uint64_t p) {
  const int n = a.order();
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = a(i, j) % Int(static_cast<unsigned long>(p));
      if (sgn(v) < 0) v += Int(static_cast<unsigned long>(p));
      m[static_cast<std::size_t>(i) * n + j] = v.get_ui();
    }
  auto at = [&](int i, int j) -> std::uint64_t& { return m[static_cast<std::size_t>(i) * n + j]; };
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
  };
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(at(rank, j), at(piv, j));
    const std::uint64_t inv = powmod(at(rank, col), p - 2);
    for (int r = rank + 1; r < n; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(at(r, col)) * inv % p);
      for (int j = col; j < n; ++j) {
        const auto sub = static_cast<unsigned __int128>(f) * at(rank, j) % p;
        at(r, j) = (at(r, j) + p - static_cast<std::uint64_t>(sub)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline int rank_rational(const Matrix<Rat>& a) {
  const int n = a.order();
  Matrix<Rat> m = a;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (sgn(m(r, col)) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < n; ++j) std::swap(m(rank, j), m(piv, j));
    for (int r = rank + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rat f = Rat(m(r, col) / m(rank, col));
      for (int j = col; j < n; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over Q.  Fast path: elimination mod three fixed word-size primes,
/// accepted when all three agree; on disagreement fall back to exact
/// rational elimination.
inline int rank_exact(const Matrix<Int>& a) {
  static constexpr std::uint64_t primes[3] = {2147483629ULL, 2147483587ULL, 2147483563ULL};
  const int r0 = detail::rank_mod_prime(a, primes[0]);
  const int r1 = detail::rank_mod_prime(a, primes[1]);
  const int r2 = detail::rank_mod_prime(a, primes[2]);
  if (r0 == r1 && r1 == r2) return r0;
  return detail::rank_rational(to_rational(a));
}

inline int rank_exact(const Matrix<Rat>& a) { return detail::rank_rational(a); }

// ---------------------------------------------------------------------------

template <class R>
std::string matrix_str(const Matrix<R>& a) {
  std::string s;
  for (int i = 0; i < a.order(); ++i) {
    s += i == 0 ? "[" : " ";
    for (int j = 0; j < a.order(); ++j)
      s += (j ? " " : "") + RingTraits<R>::str(a(i, j));
    s += i + 1 == a.order() ? "]" : "\n";
  }
  return s;
}

}  // namespace encon
