#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spheromesh/vec3.hpp"

namespace spheromesh {

// Integer lattice point of the reference cube [-1/2,1/2]^3 refined with
// parameter p: the physical coordinate is (i1,i2,i3)/(2p), each |i_j| <= p.
struct LatticeIndex {
  int i1 = 0;
  int i2 = 0;
  int i3 = 0;

  constexpr int operator[](int j) const { return j == 0 ? i1 : (j == 1 ? i2 : i3); }
  constexpr int& operator[](int j) { return j == 0 ? i1 : (j == 1 ? i2 : i3); }

  friend constexpr bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

// Coordinate sign pattern of one of the eight octants. bits[j] == 1 means
// x_j >= 0 in that octant; the all-positive octant is the model octant nu.
struct Octant {
  std::array<int, 3> bits{1, 1, 1};

  constexpr int operator[](int j) const { return bits[j]; }
  constexpr double sign(int j) const { return bits[j] ? 1.0 : -1.0; }
  constexpr int isign(int j) const { return bits[j] ? 1 : -1; }
  constexpr int index() const { return bits[0] * 4 + bits[1] * 2 + bits[2]; }

  static constexpr Octant from_index(int oi) {
    return Octant{{(oi >> 2) & 1, (oi >> 1) & 1, oi & 1}};
  }
  static constexpr Octant nu() { return Octant{{1, 1, 1}}; }

  friend constexpr bool operator==(const Octant&, const Octant&) = default;
};

// Permutation of the axis indices {0,1,2}; alpha[0] names the axis whose
// magnitude dominates inside the macro-tetrahedron.
using Permutation = std::array<int, 3>;

// The six permutations in lexicographic order; a macro-tetrahedron label is
// an index into this table.
inline constexpr std::array<Permutation, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int permutation_id(const Permutation& perm);

// Octant / macro-tetrahedron / shell decomposition of a lattice vertex:
// l = |i_{alpha0}| >= m = |i_{alpha1}| >= n = |i_{alpha2}|.
struct Decomposition {
  Octant mu;
  Permutation alpha{0, 1, 2};
  int l = 0;
  int m = 0;
  int n = 0;
};

// Subset of the eight octants, by Octant::index() bit.
struct OctantSet {
  unsigned mask = 0xFFu;

  static constexpr OctantSet all() { return {0xFFu}; }
  static constexpr OctantSet nu_only() { return {1u << 7}; }
  static constexpr OctantSet single(const Octant& o) { return {1u << o.index()}; }

  constexpr bool contains(const Octant& o) const { return (mask >> o.index()) & 1u; }
  constexpr bool empty() const { return (mask & 0xFFu) == 0; }
  constexpr int count() const {
    int c = 0;
    for (int oi = 0; oi < 8; ++oi) c += (mask >> oi) & 1u;
    return c;
  }

  friend constexpr bool operator==(const OctantSet&, const OctantSet&) = default;
};

// One tetrahedron of the reference-cube partition. Vertices are structured
// numbers, ordered so that the signed volume in cube coordinates is positive.
struct CubeTet {
  std::array<std::int64_t, 4> v{};
  Octant mu;
  int macro = 0;  // id of the macro-tetrahedron containing the element
};

std::int64_t lattice_vertex_count(int p);  // (2p+1)^3

// Structured numbering: k - 1 = (k1-1)(2p+1)^2 + (k2-1)(2p+1) + (k3-1) with
// k_j = i_j + p + 1, so k runs from 1 at (-p,-p,-p) through (2p+1)^3 at (p,p,p).
std::int64_t number_from_index(const LatticeIndex& idx, int p);
LatticeIndex index_from_number(std::int64_t k, int p);

Decomposition decompose(const LatticeIndex& idx, int p);
Decomposition decompose(std::int64_t k, int p);

// Cube coordinates of a decomposed vertex: x_{alpha_j} carries the octant
// sign of its axis and magnitude (l,m,n)_j/(2p).
Vec3 lattice_coords(const Decomposition& dec, int p);

// Kuhn-style partition of the selected octant cubes: per small cube and per
// axis permutation one tetrahedron, 6p^3 per octant, 48p^3 in total.
std::vector<CubeTet> cube_connectivity(int p, OctantSet octants);

}  // namespace spheromesh
