#include "spheromesh/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spheromesh {

namespace {

void check_p(int p) {
  if (p < 1) throw std::invalid_argument("refinement parameter p must be >= 1, got " + std::to_string(p));
}

void check_index(const LatticeIndex& idx, int p) {
  for (int j = 0; j < 3; ++j) {
    if (idx[j] < -p || idx[j] > p) {
      throw std::invalid_argument("lattice index component i" + std::to_string(j + 1) + "=" +
                                  std::to_string(idx[j]) + " outside [-p,p] for p=" + std::to_string(p));
    }
  }
}

void check_number(std::int64_t k, int p) {
  const std::int64_t total = lattice_vertex_count(p);
  if (k < 1 || k > total) {
    throw std::invalid_argument("vertex number " + std::to_string(k) + " outside [1," +
                                std::to_string(total) + "] for p=" + std::to_string(p));
  }
}

void check_decomposition(const Decomposition& dec, int p) {
  check_p(p);
  if (!(0 <= dec.n && dec.n <= dec.m && dec.m <= dec.l && dec.l <= p))
    throw std::invalid_argument("decomposition violates 0 <= n <= m <= l <= p");
  Permutation sorted = dec.alpha;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Permutation{0, 1, 2}) throw std::invalid_argument("alpha is not a permutation of {0,1,2}");
  for (int b : dec.mu.bits)
    if (b != 0 && b != 1) throw std::invalid_argument("octant bits must be 0 or 1");
}

}  // namespace

int permutation_id(const Permutation& perm) {
  for (int i = 0; i < 6; ++i)
    if (kPermutations[i] == perm) return i;
  throw std::invalid_argument("not a permutation of {0,1,2}");
}

std::int64_t lattice_vertex_count(int p) {
  check_p(p);
  const std::int64_t side = 2 * p + 1;
  return side * side * side;
}

std::int64_t number_from_index(const LatticeIndex& idx, int p) {
  check_p(p);
  check_index(idx, p);
  const std::int64_t side = 2 * p + 1;
  const std::int64_t k1 = idx.i1 + p;  // zero-based digits
  const std::int64_t k2 = idx.i2 + p;
  const std::int64_t k3 = idx.i3 + p;
  return 1 + (k1 * side + k2) * side + k3;
}

LatticeIndex index_from_number(std::int64_t k, int p) {
  check_p(p);
  check_number(k, p);
  const std::int64_t side = 2 * p + 1;
  std::int64_t r = k - 1;
  LatticeIndex idx;
  idx.i3 = static_cast<int>(r % side) - p;
  r /= side;
  idx.i2 = static_cast<int>(r % side) - p;
  idx.i1 = static_cast<int>(r / side) - p;
  return idx;
}

Decomposition decompose(const LatticeIndex& idx, int p) {
  check_p(p);
  check_index(idx, p);
  Decomposition dec;
  // mu_j = floor(k_j/(p+1)) with k_j = i_j + p + 1: 1 exactly when i_j >= 0,
  // so vertices on a coordinate plane land in the nonnegative octant.
  dec.mu = Octant{{idx.i1 >= 0 ? 1 : 0, idx.i2 >= 0 ? 1 : 0, idx.i3 >= 0 ? 1 : 0}};
  const std::array<int, 3> mag = {std::abs(idx.i1), std::abs(idx.i2), std::abs(idx.i3)};
  // Order magnitudes descending; ties keep ascending axis order.
  dec.alpha = {0, 1, 2};
  std::stable_sort(dec.alpha.begin(), dec.alpha.end(),
                   [&](int a, int b) { return mag[a] > mag[b]; });
  dec.l = mag[dec.alpha[0]];
  dec.m = mag[dec.alpha[1]];
  dec.n = mag[dec.alpha[2]];
  return dec;
}

Decomposition decompose(std::int64_t k, int p) { return decompose(index_from_number(k, p), p); }

Vec3 lattice_coords(const Decomposition& dec, int p) {
  check_decomposition(dec, p);
  const std::array<int, 3> lmn = {dec.l, dec.m, dec.n};
  Vec3 x;
  for (int j = 0; j < 3; ++j) {
    const int axis = dec.alpha[j];
    x[axis] = dec.mu.sign(axis) * static_cast<double>(lmn[j]) / (2.0 * p);
  }
  return x;
}

namespace {

// Macro-tetrahedron containing the Kuhn element (q, perm): the coordinate
// ordering that holds throughout the element. Corner coordinates decide;
// where they tie, the element lies on the side given by the step order.
int macro_of(const std::array<int, 3>& q, const Permutation& perm) {
  std::array<int, 3> rank{};  // rank[axis] = position of the axis in perm
  for (int s = 0; s < 3; ++s) rank[perm[s]] = s;
  Permutation order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (q[a] != q[b]) return q[a] > q[b];
    return rank[a] < rank[b];
  });
  return permutation_id(order);
}

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::vector<CubeTet> cube_connectivity(int p, OctantSet octants) {
  check_p(p);
  if (octants.empty()) throw std::invalid_argument("octant set must be nonempty");

  std::vector<CubeTet> tets;
  tets.reserve(static_cast<std::size_t>(octants.count()) * 6 * p * p * p);

  for (int oi = 0; oi < 8; ++oi) {
    const Octant mu = Octant::from_index(oi);
    if (!octants.contains(mu)) continue;
    std::array<int, 3> q{};
    for (q[0] = 0; q[0] < p; ++q[0]) {
      for (q[1] = 0; q[1] < p; ++q[1]) {
        for (q[2] = 0; q[2] < p; ++q[2]) {
          for (int pid = 0; pid < 6; ++pid) {
            const Permutation& perm = kPermutations[pid];
            // Walk the cube from corner q along the permuted axes; w are
            // octant-local nonnegative lattice coordinates.
            std::array<std::array<int, 3>, 4> w;
            w[0] = q;
            for (int s = 0; s < 3; ++s) {
              w[s + 1] = w[s];
              w[s + 1][perm[s]] += 1;
            }
            CubeTet tet;
            tet.mu = mu;
            tet.macro = macro_of(q, perm);
            std::array<LatticeIndex, 4> gidx;
            for (int v = 0; v < 4; ++v) {
              gidx[v] = LatticeIndex{mu.isign(0) * w[v][0], mu.isign(1) * w[v][1],
                                     mu.isign(2) * w[v][2]};
              tet.v[v] = number_from_index(gidx[v], p);
            }
            // Canonical positive orientation in cube coordinates.
            std::array<std::array<std::int64_t, 3>, 3> edges;
            for (int r = 0; r < 3; ++r)
              for (int c = 0; c < 3; ++c) edges[r][c] = gidx[r + 1][c] - gidx[0][c];
            if (det3(edges) < 0) std::swap(tet.v[2], tet.v[3]);
            tets.push_back(tet);
          }
        }
      }
    }
  }
  return tets;
}

}  // namespace spheromesh
