#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace encon {

/**
 * Eigen decomposition of a dense symmetric matrix by cyclic Jacobi rotations
 * with a fixed row-major sweep order, so results are deterministic for a
 * given input.  values come out sorted ascending; vectors[k*n..k*n+n) is the
 * eigenvector for values[k].
 */
struct SymEigen {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // row k = eigenvector k
};

inline SymEigen jacobi_eigensystem(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  auto vt = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) vt(i, i) = 1.0;

  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double stop = norm > 0 ? 1e-15 * norm : 0.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(2.0 * off) <= stop) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= stop / (10.0 * n)) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = at(r, p), arq = at(r, q);
            at(r, p) = arp - s * (arq + tau * arp);
            at(p, r) = at(r, p);
            at(r, q) = arq + s * (arp - tau * arq);
            at(q, r) = at(r, q);
          }
          const double vrp = vt(p, r), vrq = vt(q, r);
          vt(p, r) = vrp - s * (vrq + tau * vrp);
          vt(q, r) = vrq + s * (vrp - tau * vrq);
        }
      }
  }

  SymEigen out;
  out.n = n;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = at(i, i);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return out.values[static_cast<std::size_t>(x)] < out.values[static_cast<std::size_t>(y)];
  });
  std::vector<double> sv(static_cast<std::size_t>(n));
  std::vector<double> svec(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    sv[static_cast<std::size_t>(k)] = out.values[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    for (int j = 0; j < n; ++j)
      svec[static_cast<std::size_t>(k) * n + j] = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)]) * n + j];
  }
  out.values = std::move(sv);
  out.vectors = std::move(svec);
  return out;
}

}  // namespace encon
