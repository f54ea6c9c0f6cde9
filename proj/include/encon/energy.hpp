#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "encon/rings.hpp"
#include "encon/set_system.hpp"

namespace encon {

enum class EnergyKind { Constant, Omega, Spin, Explicit };

/**
 * Scalar energy attached to every cell of a system, resolved to one value
 * per cell in the system's listed order.
 */
template <class R>
struct Energy {
  EnergyKind kind = EnergyKind::Explicit;
  std::vector<R> values;

  const R& at(int i) const { return values.at(static_cast<std::size_t>(i)); }
};

template <class R>
Energy<R> constant_energy(const SetSystem& s, const R& c) {
  return {EnergyKind::Constant, std::vector<R>(static_cast<std::size_t>(s.size()), c)};
}

template <class R>
Energy<R> omega_energy(const SetSystem& s) {
  std::vector<R> v;
  v.reserve(static_cast<std::size_t>(s.size()));
  for (const Cell& c : s.cells()) v.push_back(RingTraits<R>::from_long(c.omega()));
  return {EnergyKind::Omega, std::move(v)};
}

/// signs[i] in {-1,+1}.
inline Energy<Int> spin_energy(const SetSystem& s, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != s.size())
    throw std::invalid_argument("spin energy: need one sign per cell");
  std::vector<Int> v;
  for (int sg : signs) {
    if (sg != 1 && sg != -1) throw std::invalid_argument("spin energy: values must be +-1");
    v.emplace_back(sg);
  }
  return {EnergyKind::Spin, std::move(v)};
}

template <class R>
Energy<R> explicit_energy(const SetSystem& s, std::vector<R> values) {
  if (static_cast<int>(values.size()) != s.size())
    throw std::invalid_argument("explicit energy: need one value per cell");
  return {EnergyKind::Explicit, std::move(values)};
}

template <class R>
bool is_spin(const Energy<R>& h) {
  const R one = RingTraits<R>::one();
  for (const R& v : h.values)
    if (!(v == one || v == R(-one))) return false;
  return true;
}

template <class R>
bool is_constant_one(const Energy<R>& h) {
  const R one = RingTraits<R>::one();
  for (const R& v : h.values)
    if (!(v == one)) return false;
  return true;
}

/// E[A] = sum of h over the cells of A; the empty collection has energy 0.
template <class R>
R energy_of(const SetSystem& s, const Energy<R>& h, std::span<const Cell> a) {
  R acc = RingTraits<R>::zero();
  for (const Cell& x : a) acc = acc + h.at(s.index_of(x));
  return acc;
}

template <class R>
R total_energy(const Energy<R>& h) {
  R acc = RingTraits<R>::zero();
  for (const R& v : h.values) acc = acc + v;
  return acc;
}

}  // namespace encon
