#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace encon {

/**
 * A cell is a finite set of atom labels (non-negative integers), stored as a
 * sorted duplicate-free vector.  The empty cell is representable; it only
 * arises as the complement of a full cell when a system is dualized.
 */
class Cell {
 public:
  Cell() = default;

  explicit Cell(std::vector<int> atoms) : atoms_(std::move(atoms)) {
    normalize();
  }

  Cell(std::initializer_list<int> atoms) : atoms_(atoms) { normalize(); }

  const std::vector<int>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  int cardinality() const { return static_cast<int>(atoms_.size()); }
  int dimension() const { return cardinality() - 1; }

  // omega = (-1)^dim = +1 for odd cardinality, -1 for even (including empty).
  int omega() const { return cardinality() % 2 == 1 ? 1 : -1; }

  bool contains(int atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
  }

  bool subset_of(const Cell& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(),
                         atoms_.begin(), atoms_.end());
  }

  friend Cell intersect(const Cell& a, const Cell& b) {
    std::vector<int> out;
    std::set_intersection(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                          b.atoms_.end(), std::back_inserter(out));
    return Cell(std::move(out));
  }

  friend Cell cell_union(const Cell& a, const Cell& b) {
    std::vector<int> out;
    std::set_union(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                   b.atoms_.end(), std::back_inserter(out));
    return Cell(std::move(out));
  }

  // Complement within a sorted ground set.
  friend Cell complement(const Cell& a, const std::vector<int>& ground) {
    std::vector<int> out;
    std::set_difference(ground.begin(), ground.end(), a.atoms_.begin(),
                        a.atoms_.end(), std::back_inserter(out));
    return Cell(std::move(out));
  }

  bool operator==(const Cell& other) const = default;

  // Canonical order: cardinality first, then lexicographic on atoms.  This is
  // a linear extension of strict inclusion.
  friend bool canonical_less(const Cell& a, const Cell& b) {
    if (a.atoms_.size() != b.atoms_.size())
      return a.atoms_.size() < b.atoms_.size();
    return a.atoms_ < b.atoms_;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(atoms_[i]);
    }
    return s + "}";
  }

 private:
  void normalize() {
    for (int a : atoms_)
      if (a < 0) throw std::invalid_argument("cell atoms must be >= 0");
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::vector<int> atoms_;
};

}  // namespace encon
