#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/cell.hpp"
#include "encon/prng.hpp"

namespace encon {

/**
 * An ordered collection of distinct cells.  The order of the cell list is the
 * basis order for every matrix built from the system; canonical order
 * (cardinality, then lexicographic) puts every strict subset of a cell before
 * the cell itself.
 */
class SetSystem {
 public:
  SetSystem() = default;

  explicit SetSystem(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (std::size_t j = i + 1; j < cells_.size(); ++j)
        if (cells_[i] == cells_[j])
          throw std::invalid_argument("duplicate cell " + cells_[i].str());
    recompute();
  }

  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<int>& ground() const { return ground_; }
  bool simplicial() const { return simplicial_; }

  bool contains(const Cell& x) const {
    return std::find(cells_.begin(), cells_.end(), x) != cells_.end();
  }

  int index_of(const Cell& x) const {
    auto it = std::find(cells_.begin(), cells_.end(), x);
    if (it == cells_.end())
      throw std::invalid_argument("cell not in system: " + x.str());
    return static_cast<int>(it - cells_.begin());
  }

  bool has_empty_cell() const {
    return std::any_of(cells_.begin(), cells_.end(),
                       [](const Cell& c) { return c.empty(); });
  }

  bool canonically_ordered() const {
    for (std::size_t i = 1; i < cells_.size(); ++i)
      if (!canonical_less(cells_[i - 1], cells_[i])) return false;
    return true;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i) s += ",";
      s += cells_[i].str();
    }
    return s + "}";
  }

 private:
  void recompute() {
    std::set<int> g;
    for (const Cell& c : cells_)
      for (int a : c.atoms()) g.insert(a);
    ground_.assign(g.begin(), g.end());
    simplicial_ = compute_simplicial();
  }

  bool compute_simplicial() const {
    if (cells_.empty()) return true;
    std::set<std::vector<int>> present;
    for (const Cell& c : cells_) {
      if (c.empty()) return false;
      present.insert(c.atoms());
    }
    for (const Cell& c : cells_) {
      const auto& a = c.atoms();
      const int k = c.cardinality();
      if (k > 30) throw std::length_error("cell too large for closure check");
      for (std::uint32_t m = 1; m + 1 < (1u << k); ++m) {
        std::vector<int> sub;
        for (int b = 0; b < k; ++b)
          if (m & (1u << b)) sub.push_back(a[static_cast<std::size_t>(b)]);
        if (!present.count(sub)) return false;
      }
    }
    return true;
  }

  std::vector<Cell> cells_;
  std::vector<int> ground_;
  bool simplicial_ = false;
};

// ---------------------------------------------------------------------------
// Ordering and closure

inline SetSystem canonical_order(const SetSystem& s) {
  std::vector<Cell> cells = s.cells();
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return canonical_less(a, b); });
  return SetSystem(std::move(cells));
}

/// All non-empty subsets of the generators, deduplicated, canonically sorted.
inline SetSystem downward_closure(const std::vector<Cell>& generators) {
  std::set<std::vector<int>> out;
  for (const Cell& g : generators) {
    if (g.empty())
      throw std::invalid_argument("empty generator cell");
    const auto& a = g.atoms();
    const int k = g.cardinality();
    if (k > 30) throw std::length_error("generator too large");
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (m & (1u << b)) sub.push_back(a[static_cast<std::size_t>(b)]);
      out.insert(std::move(sub));
    }
  }
  std::vector<Cell> cells;
  cells.reserve(out.size());
  for (const auto& v : out) cells.emplace_back(v);
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return canonical_less(a, b); });
  return SetSystem(std::move(cells));
}

// ---------------------------------------------------------------------------
// Stars, cores, duals

/// Cells of s containing x (including x itself).  x must belong to s.
inline std::vector<Cell> star(const SetSystem& s, const Cell& x) {
  if (!s.contains(x))
    throw std::invalid_argument("star: cell not in system: " + x.str());
  std::vector<Cell> out;
  for (const Cell& y : s.cells())
    if (x.subset_of(y)) out.push_back(y);
  return out;
}

/// Cells of s contained in x (including x itself).  x must belong to s.
inline std::vector<Cell> core(const SetSystem& s, const Cell& x) {
  if (!s.contains(x))
    throw std::invalid_argument("core: cell not in system: " + x.str());
  std::vector<Cell> out;
  for (const Cell& y : s.cells())
    if (y.subset_of(x)) out.push_back(y);
  return out;
}

/// Complements of the cells within the ground set, order preserved cell by
/// cell.  The result may contain the empty cell; dualizing twice returns the
/// original system.
inline SetSystem boolean_dual(const SetSystem& s) {
  std::vector<Cell> out;
  out.reserve(s.cells().size());
  for (const Cell& c : s.cells()) out.push_back(complement(c, s.ground()));
  return SetSystem(std::move(out));
}

// ---------------------------------------------------------------------------
// f-vector and atoms

/// f[k-1] = number of cells of cardinality k.
inline std::vector<long> f_vector(const SetSystem& s) {
  int maxcard = 0;
  for (const Cell& c : s.cells()) maxcard = std::max(maxcard, c.cardinality());
  std::vector<long> f(static_cast<std::size_t>(maxcard), 0);
  for (const Cell& c : s.cells())
    if (c.cardinality() >= 1) ++f[static_cast<std::size_t>(c.cardinality() - 1)];
  return f;
}

/// f(t) = 1 + sum_k f_k t^k.  The empty system and the system {{}} both give 1.
template <class R>
R f_poly_eval(const SetSystem& s, const R& t) {
  R acc(1);
  R tp(1);
  for (long fk : f_vector(s)) {
    tp = tp * t;
    acc = acc + R(fk) * tp;
  }
  return acc;
}

/// Non-empty cells with no proper non-empty subset present in the system.
inline std::vector<Cell> atoms(const SetSystem& s) {
  std::vector<Cell> out;
  for (const Cell& x : s.cells()) {
    if (x.empty()) continue;
    bool minimal = true;
    for (const Cell& y : s.cells()) {
      if (y.empty() || y == x) continue;
      if (y.subset_of(x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named generators

/// All 2^n - 1 non-empty subsets of {1..n}.
inline SetSystem complete_complex(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("complete_complex: need 1 <= n <= 20");
  std::vector<int> top(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = i + 1;
  return downward_closure({Cell(top)});
}

/// Vertices and edges of the n-cycle, closed downward.
inline SetSystem cycle_complex(int n) {
  if (n < 3) throw std::invalid_argument("cycle_complex: need n >= 3");
  std::vector<Cell> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(Cell{i, i % n + 1});
  return downward_closure(gens);
}

/// Vertices and edges of the w x h grid graph (its clique complex: the grid
/// graph has no triangles).  Vertex (i,j) gets label i*h + j + 1.
inline SetSystem grid_whitney(int w, int h) {
  if (w < 2 || h < 2) throw std::invalid_argument("grid_whitney: need w,h >= 2");
  auto v = [h](int i, int j) { return i * h + j + 1; };
  std::vector<Cell> gens;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < h; ++j) {
      if (i + 1 < w) gens.push_back(Cell{v(i, j), v(i + 1, j)});
      if (j + 1 < h) gens.push_back(Cell{v(i, j), v(i, j + 1)});
    }
  return downward_closure(gens);
}

/// m random generator subsets of {1..n}, each built from k = 1+uniform(0,n-1)
/// atom draws with duplicates removed, then the downward closure of them all.
inline SetSystem random_sets(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) throw std::invalid_argument("random_sets: need n >= 1, m >= 0");
  SplitMix64 rng(seed);
  std::vector<Cell> gens;
  for (int i = 0; i < m; ++i) {
    const long k = 1 + rng.range(0, n - 1);
    std::vector<int> pick;
    for (long j = 0; j < k; ++j) pick.push_back(1 + static_cast<int>(rng.range(0, n - 1)));
    gens.emplace_back(std::move(pick));
  }
  if (gens.empty()) return SetSystem{};
  return downward_closure(gens);
}

/// m random non-empty subsets of {1..n} with no closure applied: a plain set
/// of sets, canonically ordered.  Duplicates are dropped, so the result may
/// have fewer than m cells.
inline SetSystem random_set_of_sets(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) throw std::invalid_argument("random_set_of_sets: need n >= 1, m >= 0");
  SplitMix64 rng(seed);
  std::set<std::vector<int>> out;
  for (int i = 0; i < m; ++i) {
    const long k = 1 + rng.range(0, n - 1);
    std::vector<int> pick;
    for (long j = 0; j < k; ++j) pick.push_back(1 + static_cast<int>(rng.range(0, n - 1)));
    Cell c(std::move(pick));
    out.insert(c.atoms());
  }
  std::vector<Cell> cells;
  for (const auto& v : out) cells.emplace_back(v);
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return canonical_less(a, b); });
  return SetSystem(std::move(cells));
}

/// Path complex on |bits| vertices with a pendant edge hanging off vertex i+1
/// wherever bits[i] is set.
inline SetSystem decorated_path(const std::vector<int>& bits) {
  if (bits.empty()) throw std::invalid_argument("decorated_path: empty bit string");
  const int n = static_cast<int>(bits.size());
  std::vector<Cell> gens;
  if (n == 1) gens.push_back(Cell{1});
  for (int i = 1; i < n; ++i) gens.push_back(Cell{i, i + 1});
  int next = n + 1;
  for (int i = 0; i < n; ++i)
    if (bits[static_cast<std::size_t>(i)]) gens.push_back(Cell{i + 1, next++});
  return downward_closure(gens);
}

}  // namespace encon
