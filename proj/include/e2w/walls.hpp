#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "e2w/angle.hpp"
#include "e2w/complex.hpp"
#include "e2w/errors.hpp"

namespace e2w {

/// One crossing of a wall through a 2-cell: the segment joining the
/// midpoints of an opposite edge pair.
struct Mirror {
  int face = -1;
  int pos_a = -1, pos_b = -1;  // cycle positions, pos_b antipodal to pos_a
};

/// A wall: an equivalence class of edges under the opposite-edge relation,
/// together with its crossings. The wall graph has the dual edges as nodes
/// and the mirrors as arcs; in a complex of non-positive curvature it is a
/// tree and the wall is embedded.
struct Wall {
  int id = -1;
  std::vector<int> dual_edges;        // ascending edge ids
  std::vector<Mirror> mirrors;
  std::vector<int> carrier_faces;     // ascending
  std::vector<int> carrier_vertices;  // ascending
  bool embedded = false;   // tree, and no face crossed twice
  bool two_sided = false;  // removal leaves exactly two components
  int tree_depth = 0;      // diameter of the wall tree, in mirrors
};

namespace detail {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// All walls of a complex plus the derived side structure. Side labels are
/// bit-packed per vertex (bit w = 1 when the vertex lies in wall w's Minus
/// halfspace), which makes wall-counting between vertices a popcount.
struct WallSet {
  int wall_count = 0;
  std::vector<Wall> walls;
  std::vector<int> edge_wall;  // edge id -> wall id
  int words = 0;               // 64-bit words per vertex row
  std::vector<std::uint64_t> side_bits;  // vertex-major
  std::vector<std::uint64_t> meet_bits;  // wall-major: walls sharing a face
  bool all_embedded = true;
  bool all_two_sided = true;

  /// false = Plus (the halfspace of vertex 0), true = Minus.
  bool side(int wall, int v) const {
    return (side_bits[static_cast<std::size_t>(v) * words + wall / 64] >>
            (wall % 64)) &
           1;
  }

  /// Two distinct walls intersect exactly when they cross a common face.
  bool walls_intersect(int w1, int w2) const {
    return (meet_bits[static_cast<std::size_t>(w1) * words + w2 / 64] >>
            (w2 % 64)) &
           1;
  }

  const std::uint64_t* row(int v) const {
    return side_bits.data() + static_cast<std::size_t>(v) * words;
  }

  /// Number of walls whose halfspaces split v from u.
  int count_separating(int v, int u) const {
    const std::uint64_t* a = row(v);
    const std::uint64_t* b = row(u);
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(a[i] ^ b[i]);
    return c;
  }

  /// Ascending ids of the walls splitting v from u.
  std::vector<int> separating_walls(int v, int u) const {
    std::vector<int> out;
    const std::uint64_t* a = row(v);
    const std::uint64_t* b = row(u);
    for (int i = 0; i < words; ++i) {
      std::uint64_t x = a[i] ^ b[i];
      while (x) {
        int bit = std::countr_zero(x);
        out.push_back(i * 64 + bit);
        x &= x - 1;
      }
    }
    return out;
  }
};

/// Union-find pass over the opposite-edge relation, then per-wall structure
/// and halfspace labels. With check=true (the default) a wall that is not an
/// embedded tree raises WallNotEmbedded and a wall whose removal does not
/// split the skeleton into exactly two components raises BadSeparation;
/// check=false records the failures in the per-wall flags instead.
inline WallSet build_walls(const EvenComplex& X, bool check = true) {
  WallSet ws;
  detail::DisjointSet ds(X.edge_count());
  for (int f = 0; f < X.face_count(); ++f) {
    int n = X.half_sides(f);
    for (int i = 0; i < n; ++i)
      ds.unite(X.face_edges[f][i], X.face_edges[f][i + n]);
  }

  // Wall ids in ascending order of the smallest member edge.
  ws.edge_wall.assign(X.edge_count(), -1);
  std::vector<int> root_wall(X.edge_count(), -1);
  for (int e = 0; e < X.edge_count(); ++e) {
    int r = ds.find(e);
    if (root_wall[r] < 0) {
      root_wall[r] = ws.wall_count++;
      ws.walls.emplace_back();
      ws.walls.back().id = root_wall[r];
    }
    ws.edge_wall[e] = root_wall[r];
    ws.walls[root_wall[r]].dual_edges.push_back(e);
  }

  for (int f = 0; f < X.face_count(); ++f) {
    int n = X.half_sides(f);
    for (int i = 0; i < n; ++i) {
      Mirror m;
      m.face = f;
      m.pos_a = i;
      m.pos_b = i + n;
      ws.walls[ws.edge_wall[X.face_edges[f][i]]].mirrors.push_back(m);
    }
  }

  for (Wall& w : ws.walls) {
    // Carrier.
    for (const Mirror& m : w.mirrors) w.carrier_faces.push_back(m.face);
    std::sort(w.carrier_faces.begin(), w.carrier_faces.end());
    w.carrier_faces.erase(
        std::unique(w.carrier_faces.begin(), w.carrier_faces.end()),
        w.carrier_faces.end());
    for (int f : w.carrier_faces)
      w.carrier_vertices.insert(w.carrier_vertices.end(), X.faces[f].begin(),
                                X.faces[f].end());
    std::sort(w.carrier_vertices.begin(), w.carrier_vertices.end());
    w.carrier_vertices.erase(
        std::unique(w.carrier_vertices.begin(), w.carrier_vertices.end()),
        w.carrier_vertices.end());

    // Embedded = tree (|mirrors| = |duals| - 1; connected by construction)
    // and no face crossed by two mirrors of the same wall.
    bool face_twice = w.carrier_faces.size() != w.mirrors.size();
    bool tree = static_cast<int>(w.mirrors.size()) ==
                static_cast<int>(w.dual_edges.size()) - 1;
    w.embedded = tree && !face_twice;
    if (!w.embedded) {
      ws.all_embedded = false;
      require(!check, ErrorCode::WallNotEmbedded,
              "wall " + std::to_string(w.id) +
                  (face_twice ? " crosses a face twice" :
                                " has a cycle in its wall graph"));
    }

    // Tree depth: diameter of the wall graph via double BFS.
    if (w.embedded && !w.mirrors.empty()) {
      auto node_of = [&w](int e) {
        return static_cast<int>(std::lower_bound(w.dual_edges.begin(),
                                                 w.dual_edges.end(), e) -
                                w.dual_edges.begin());
      };
      std::vector<std::vector<int>> adj(w.dual_edges.size());
      for (const Mirror& m : w.mirrors) {
        const EvenComplex& C = X;
        int ea = C.face_edges[m.face][m.pos_a];
        int eb = C.face_edges[m.face][m.pos_b];
        adj[node_of(ea)].push_back(node_of(eb));
        adj[node_of(eb)].push_back(node_of(ea));
      }
      auto far = [&adj](int s) {
        std::vector<int> d(adj.size(), -1);
        std::queue<int> q;
        d[s] = 0;
        q.push(s);
        int best = s;
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          if (d[u] > d[best]) best = u;
          for (int v : adj[u])
            if (d[v] < 0) {
              d[v] = d[u] + 1;
              q.push(v);
            }
        }
        return std::pair(best, d[best]);
      };
      w.tree_depth = far(far(0).first).second;
    }
  }

  // Halfspace labels: remove each wall's dual edges, expect two components,
  // Plus = the component of vertex 0.
  ws.words = (ws.wall_count + 63) / 64;
  ws.side_bits.assign(static_cast<std::size_t>(X.vertex_count) * ws.words, 0);
  for (Wall& w : ws.walls) {
    detail::DisjointSet comp(X.vertex_count);
    std::vector<char> banned(X.edge_count(), 0);
    for (int e : w.dual_edges) banned[e] = 1;
    for (int e = 0; e < X.edge_count(); ++e)
      if (!banned[e]) comp.unite(X.edges[e][0], X.edges[e][1]);
    int plus = comp.find(0);
    int others = -1;
    bool exactly_two = true;
    for (int v = 0; v < X.vertex_count && exactly_two; ++v) {
      int r = comp.find(v);
      if (r == plus) continue;
      if (others < 0) others = r;
      else if (r != others) exactly_two = false;
    }
    w.two_sided = exactly_two && others >= 0;
    if (!w.two_sided) {
      ws.all_two_sided = false;
      require(!check, ErrorCode::BadSeparation,
              "removing wall " + std::to_string(w.id) +
                  " does not leave exactly two components");
      continue;
    }
    for (int v = 0; v < X.vertex_count; ++v)
      if (comp.find(v) != plus)
        ws.side_bits[static_cast<std::size_t>(v) * ws.words + w.id / 64] |=
            std::uint64_t(1) << (w.id % 64);
  }

  // Wall intersection table: distinct walls crossing a common face.
  ws.meet_bits.assign(static_cast<std::size_t>(ws.wall_count) * ws.words, 0);
  auto mark = [&ws](int a, int b) {
    ws.meet_bits[static_cast<std::size_t>(a) * ws.words + b / 64] |=
        std::uint64_t(1) << (b % 64);
  };
  std::vector<int> face_walls;
  for (int f = 0; f < X.face_count(); ++f) {
    face_walls.clear();
    int n = X.half_sides(f);
    for (int i = 0; i < n; ++i)
      face_walls.push_back(ws.edge_wall[X.face_edges[f][i]]);
    std::sort(face_walls.begin(), face_walls.end());
    face_walls.erase(std::unique(face_walls.begin(), face_walls.end()),
                     face_walls.end());
    for (std::size_t i = 0; i < face_walls.size(); ++i)
      for (std::size_t j = i + 1; j < face_walls.size(); ++j) {
        mark(face_walls[i], face_walls[j]);
        mark(face_walls[j], face_walls[i]);
      }
  }
  return ws;
}

/// Skeleton distance from every vertex to the nearest endpoint of a dual
/// edge of the wall (the vertex-to-wall distance is this plus 1/2).
inline std::vector<int> wall_vertex_steps(const EvenComplex& X,
                                          const WallSet& ws, int wall) {
  std::vector<int> sources;
  for (int e : ws.walls[wall].dual_edges) {
    sources.push_back(X.edges[e][0]);
    sources.push_back(X.edges[e][1]);
  }
  return bfs_distances_multi(X, sources);
}

/// d1(v, W) = (steps to the nearest dual endpoint) + 1/2.
inline HalfDist d1_vertex_wall(const EvenComplex& X, const WallSet& ws,
                               int v, int wall) {
  return HalfDist::and_half(wall_vertex_steps(X, ws, wall)[v]);
}

/// Whether wall `sep` separates vertex v from wall `wall`: the walls are
/// disjoint and every dual-edge endpoint of `wall` lies on the opposite side
/// of `sep` from v. Endpoint sides are checked exhaustively and must agree
/// (they do whenever the two walls are disjoint, since walls are connected).
inline bool separates_vertex_from_wall(const EvenComplex& X, const WallSet& ws,
                                       int v, int wall, int sep) {
  if (sep == wall) return false;
  if (ws.walls_intersect(wall, sep)) return false;
  bool first = true, side = false;
  for (int e : ws.walls[wall].dual_edges)
    for (int u : {X.edges[e][0], X.edges[e][1]}) {
      bool s = ws.side(sep, u);
      if (first) {
        side = s;
        first = false;
      } else {
        require(s == side, ErrorCode::Internal,
                "disjoint wall sees both sides of a connected wall");
      }
    }
  return ws.side(sep, v) != side;
}

/// Per-wall separation masks: candidates[i] has bit w' set when wall w' is
/// disjoint from `wall` and all of `wall` lies on a single side of w';
/// labels[i] holds that side. A vertex v is then separated from `wall` by
/// exactly the walls in (row(v) XOR labels) AND candidates.
struct SeparationMasks {
  std::vector<std::uint64_t> candidates, labels;
};

inline SeparationMasks separation_masks(const EvenComplex& X,
                                        const WallSet& ws, int wall) {
  SeparationMasks m;
  const Wall& w = ws.walls[wall];
  int base = X.edges[w.dual_edges[0]][0];
  m.labels.assign(ws.row(base), ws.row(base) + ws.words);
  std::vector<std::uint64_t> disagree(ws.words, 0);
  for (int e : w.dual_edges)
    for (int u : {X.edges[e][0], X.edges[e][1]}) {
      const std::uint64_t* r = ws.row(u);
      for (int i = 0; i < ws.words; ++i) disagree[i] |= r[i] ^ m.labels[i];
    }
  m.candidates.assign(ws.words, 0);
  const std::uint64_t* meet =
      ws.meet_bits.data() + static_cast<std::size_t>(wall) * ws.words;
  for (int i = 0; i < ws.words; ++i) m.candidates[i] = ~disagree[i] & ~meet[i];
  // Mask off the wall itself and the tail beyond wall_count.
  m.candidates[wall / 64] &= ~(std::uint64_t(1) << (wall % 64));
  int tail = ws.wall_count % 64;
  if (tail) m.candidates[ws.words - 1] &= (std::uint64_t(1) << tail) - 1;
  return m;
}

/// Walls separating v from `wall`, via precomputed masks (ascending ids).
inline std::vector<int> separating_walls_from_wall(const WallSet& ws,
                                                   const SeparationMasks& m,
                                                   int v) {
  std::vector<int> out;
  const std::uint64_t* r = ws.row(v);
  for (int i = 0; i < ws.words; ++i) {
    std::uint64_t x = (r[i] ^ m.labels[i]) & m.candidates[i];
    while (x) {
      out.push_back(i * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

inline bool is_separated_from_wall(const WallSet& ws, const SeparationMasks& m,
                                   int v) {
  const std::uint64_t* r = ws.row(v);
  for (int i = 0; i < ws.words; ++i)
    if ((r[i] ^ m.labels[i]) & m.candidates[i]) return true;
  return false;
}

}  // namespace e2w
