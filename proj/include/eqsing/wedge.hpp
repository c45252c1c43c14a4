#pragma once

// Exterior-algebra coordinates used for tangent planes: Lambda^2 (Pluecker)
// and Lambda^3 (membership of a vector in a plane).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eqsing {

/// Canonical (i < j) index pairs for C(n, 2) coordinates, 0-based.
std::vector<std::array<unsigned, 2>> pair_indices(unsigned n);
/// Canonical (i < j < k) index triples, 0-based.
std::vector<std::array<unsigned, 3>> triple_indices(unsigned n);
/// Position of (i, j), i < j, in the canonical pair order.
std::size_t pair_position(unsigned i, unsigned j, unsigned n);

/// Pluecker coordinates p_ij = r1_i r2_j - r1_j r2_i in canonical order.
template <class T>
std::vector<T> wedge2(const std::vector<T>& r1, const std::vector<T>& r2) {
  if (r1.size() != r2.size()) throw std::invalid_argument("wedge2: dimension mismatch");
  std::vector<T> out;
  for (auto [i, j] : pair_indices(static_cast<unsigned>(r1.size())))
    out.push_back(r1[i] * r2[j] - r1[j] * r2[i]);
  return out;
}

/// (v ^ omega)_ijk = v_i w_jk - v_j w_ik + v_k w_ij for i < j < k.
/// For decomposable omega, v lies in the plane iff every coordinate is zero.
template <class T>
std::vector<T> wedge3(const std::vector<T>& v, const std::vector<T>& omega) {
  const auto n = static_cast<unsigned>(v.size());
  if (omega.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw std::invalid_argument("wedge3: dimension mismatch");
  std::vector<T> out;
  for (auto [i, j, k] : triple_indices(n)) {
    out.push_back(v[i] * omega[pair_position(j, k, n)] - v[j] * omega[pair_position(i, k, n)] +
                  v[k] * omega[pair_position(i, j, n)]);
  }
  return out;
}

}  // namespace eqsing
