#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "e2w/complex.hpp"
#include "e2w/errors.hpp"

namespace e2w {

/// Result of the algebraic simple-connectivity proxy: a complex is accepted
/// when it is connected, has Euler characteristic 1, and trivial first
/// integral homology (free rank 0 and no torsion).
struct HomologyReport {
  bool connected = false;
  long long euler = 0;
  int betti1 = 0;
  std::vector<long long> torsion;  // elementary divisors > 1

  bool pass() const {
    return connected && euler == 1 && betti1 == 0 && torsion.empty();
  }
};

namespace detail {

/// Smith-style elimination over the integers. Returns the diagonal
/// elementary divisors (non-negative, divisibility-ordered). The matrix is
/// destroyed. Smallest-pivot selection keeps entries tame on the sparse
/// boundary matrices this is used for; arithmetic overflow is checked.
inline std::vector<long long> elementary_divisors(
    std::vector<std::vector<long long>>& m) {
  auto checked_mul = [](long long a, long long b) {
    long long r;
    require(!__builtin_mul_overflow(a, b, &r), ErrorCode::Internal,
            "overflow in integer elimination");
    return r;
  };
  auto checked_sub = [](long long a, long long b) {
    long long r;
    require(!__builtin_sub_overflow(a, b, &r), ErrorCode::Internal,
            "overflow in integer elimination");
    return r;
  };

  std::vector<long long> divisors;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (true) {
    // Find the smallest-magnitude nonzero entry in the remaining block.
    std::size_t pr = rows, pc = cols;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (best == 0 || std::llabs(m[i][j]) < std::llabs(best))) {
          best = m[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows && clean; ++i)
      if (m[i][t] % m[t][t] != 0) clean = false;
    for (std::size_t j = t + 1; j < cols && clean; ++j)
      if (m[t][j] % m[t][t] != 0) clean = false;

    // Reduce row t and column t by the pivot; loop until both are clear.
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      long long f = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j)
        m[i][j] = checked_sub(m[i][j], checked_mul(f, m[t][j]));
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      long long f = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i)
        m[i][j] = checked_sub(m[i][j], checked_mul(f, m[i][t]));
    }
    bool cleared = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) cleared = false;
    for (std::size_t j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) cleared = false;
    if (!cleared) continue;  // remainders survived; pick a smaller pivot
    (void)clean;
    divisors.push_back(std::llabs(m[t][t]));
    ++t;
    if (t >= rows || t >= cols) break;
  }

  // Enforce the divisibility chain d1 | d2 | ... (gcd/lcm swap).
  for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      long long a = divisors[i], b = divisors[j];
      long long g = std::gcd(a, b);
      if (g == 0) continue;
      divisors[i] = g;
      divisors[j] = a / g * b;
    }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace detail

/// Connectivity + Euler characteristic + integral H1 via boundary-matrix
/// reduction. Free (edge, face) pairs are collapsed first — a homotopy
/// equivalence — so the integer elimination only ever sees the small residual
/// core (empty for disc-like complexes).
inline HomologyReport homology_proxy_check(const EvenComplex& X) {
  HomologyReport rep;
  rep.euler = static_cast<long long>(X.vertex_count) - X.edge_count() +
              X.face_count();

  std::vector<int> dist = bfs_distances(X, 0);
  rep.connected =
      std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  if (!rep.connected) {
    rep.betti1 = -1;  // not meaningful; pass() is already false
    return rep;
  }

  // Collapse edges that lie in exactly one living face.
  std::vector<char> face_alive(X.face_count(), 1), edge_alive(X.edge_count(), 1);
  std::vector<int> load(X.edge_count(), 0);
  for (int e = 0; e < X.edge_count(); ++e)
    load[e] = static_cast<int>(X.edge_faces[e].size());
  std::queue<int> q;
  for (int e = 0; e < X.edge_count(); ++e)
    if (load[e] == 1) q.push(e);
  while (!q.empty()) {
    int e = q.front();
    q.pop();
    if (!edge_alive[e] || load[e] != 1) continue;
    int f = -1;
    for (int g : X.edge_faces[e])
      if (face_alive[g]) f = g;
    if (f < 0) continue;
    edge_alive[e] = 0;
    face_alive[f] = 0;
    for (int g : X.face_edges[f]) {
      if (g == e || !edge_alive[g]) continue;
      if (--load[g] == 1) q.push(g);
    }
  }

  int live_faces = static_cast<int>(
      std::count(face_alive.begin(), face_alive.end(), 1));
  int live_edges = static_cast<int>(
      std::count(edge_alive.begin(), edge_alive.end(), 1));

  // Cycle rank of the residual 1-skeleton (vertices unchanged, connected).
  int cycle_rank = live_edges - X.vertex_count + 1;

  if (live_faces == 0) {
    rep.betti1 = cycle_rank;
    return rep;
  }

  // Residual boundary matrix: rows = living edges, columns = living faces,
  // entries are signed traversal counts (+1 for low->high vertex order).
  std::vector<int> row_of(X.edge_count(), -1);
  int r = 0;
  for (int e = 0; e < X.edge_count(); ++e)
    if (edge_alive[e]) row_of[e] = r++;
  std::vector<std::vector<long long>> m(
      live_edges, std::vector<long long>(live_faces, 0));
  int c = 0;
  for (int f = 0; f < X.face_count(); ++f) {
    if (!face_alive[f]) continue;
    const auto& cyc = X.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      int e = X.face_edges[f][i];
      if (!edge_alive[e]) continue;
      m[row_of[e]][c] += (a < b) ? 1 : -1;
    }
    ++c;
  }

  std::vector<long long> divisors = detail::elementary_divisors(m);
  int rank = 0;
  for (long long d : divisors) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) rep.torsion.push_back(d);
  }
  rep.betti1 = cycle_rank - rank;
  return rep;
}

}  // namespace e2w
