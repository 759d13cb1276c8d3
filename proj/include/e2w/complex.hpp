#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "e2w/errors.hpp"

namespace e2w {

/// A 2-complex whose 2-cells are combinatorial polygons with an even number
/// of sides (at least 4). Vertices carry dense ids 0..vertex_count-1; edges
/// are keyed by their unordered vertex pair, so parallel edges (bigons) are
/// unrepresentable by construction. Immutable after build_complex.
struct EvenComplex {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;        // {a, b} with a < b
  std::vector<std::vector<int>> faces;          // vertex cycles as given
  std::vector<std::vector<int>> face_edges;     // edge id per cycle position
  std::vector<std::vector<int>> vertex_edges;   // incident edge ids, ascending
  std::vector<std::vector<int>> edge_faces;     // face ids per edge, ascending
  std::string name;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  /// Half the side count of a face: the n of a 2n-gon.
  int half_sides(int face) const {
    return static_cast<int>(faces[face].size()) / 2;
  }

  /// Edge id joining a and b, or -1.
  int edge_between(int a, int b) const {
    auto it = edge_ids_.find(edge_key(a, b));
    return it == edge_ids_.end() ? -1 : it->second;
  }

  /// The other endpoint of edge e as seen from v.
  int edge_other(int e, int v) const {
    return edges[e][0] == v ? edges[e][1] : edges[e][0];
  }

  /// Position of vertex v in face f's cycle, or -1.
  int position_in_face(int f, int v) const {
    const auto& c = faces[f];
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      if (c[i] == v) return i;
    return -1;
  }

  static std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  std::unordered_map<std::uint64_t, int> edge_ids_;
};

/// Position of the edge opposite to cycle position pos in face f: in a
/// 2n-gon the edge at pos pairs with the edge at (pos + n) mod 2n.
inline int opposite_position(const EvenComplex& X, int f, int pos) {
  int sides = static_cast<int>(X.faces[f].size());
  return (pos + sides / 2) % sides;
}

/// Validates and indexes a complex given as a list of face cycles.
/// Deterministic: the same input list yields the identical id assignment
/// (vertex ids are taken literally; edge ids in order of first appearance).
inline EvenComplex build_complex(const std::vector<std::vector<int>>& cycles,
                                 std::string name = {}) {
  EvenComplex X;
  X.name = std::move(name);
  int max_vertex = -1;
  for (std::size_t fi = 0; fi < cycles.size(); ++fi) {
    const auto& c = cycles[fi];
    const std::string where = "face " + std::to_string(fi);
    require(c.size() % 2 == 0, ErrorCode::OddFace,
            where + " has odd length " + std::to_string(c.size()));
    require(c.size() >= 4, ErrorCode::FaceTooSmall,
            where + " has length " + std::to_string(c.size()) + " < 4");
    std::set<int> seen;
    for (int v : c) {
      require(v >= 0, ErrorCode::ParseError,
              where + " contains negative vertex id");
      require(seen.insert(v).second, ErrorCode::DegenerateFace,
              where + " repeats vertex " + std::to_string(v));
      max_vertex = std::max(max_vertex, v);
    }
  }
  X.vertex_count = max_vertex + 1;
  require(X.vertex_count > 0, ErrorCode::Disconnected, "empty complex");

  X.faces.assign(cycles.begin(), cycles.end());
  X.face_edges.resize(cycles.size());
  for (std::size_t fi = 0; fi < cycles.size(); ++fi) {
    const auto& c = cycles[fi];
    auto& fe = X.face_edges[fi];
    fe.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      auto key = EvenComplex::edge_key(a, b);
      auto [it, fresh] = X.edge_ids_.try_emplace(key, X.edge_count());
      if (fresh) X.edges.push_back({std::min(a, b), std::max(a, b)});
      fe[i] = it->second;
    }
  }

  X.vertex_edges.resize(X.vertex_count);
  for (int e = 0; e < X.edge_count(); ++e) {
    X.vertex_edges[X.edges[e][0]].push_back(e);
    X.vertex_edges[X.edges[e][1]].push_back(e);
  }
  X.edge_faces.resize(X.edge_count());
  for (int f = 0; f < X.face_count(); ++f)
    for (int e : X.face_edges[f]) X.edge_faces[e].push_back(f);
  for (auto& fs : X.edge_faces) std::sort(fs.begin(), fs.end());

  // Connectivity over the full dense id range: ids that appear in no face
  // would be isolated vertices, which also fails here.
  std::vector<char> seen(X.vertex_count, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : X.vertex_edges[v]) {
      int w = X.edge_other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  require(reached == X.vertex_count, ErrorCode::Disconnected,
          "1-skeleton has more than one component (reached " +
              std::to_string(reached) + " of " +
              std::to_string(X.vertex_count) + " vertices)");
  return X;
}

/// Distinct polygon side counts (2n values) present in the complex.
inline std::set<int> shapes(const EvenComplex& X) {
  std::set<int> s;
  for (const auto& c : X.faces) s.insert(static_cast<int>(c.size()));
  return s;
}

/// Largest n over the 2n-gons of the complex.
inline int max_half_sides(const EvenComplex& X) {
  int n = 0;
  for (const auto& c : X.faces) n = std::max(n, static_cast<int>(c.size()) / 2);
  return n;
}

/// Edge-path distances from src in the 1-skeleton.
inline std::vector<int> bfs_distances(const EvenComplex& X, int src) {
  std::vector<int> dist(X.vertex_count, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : X.vertex_edges[v]) {
      int w = X.edge_other(e, v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Multi-source BFS distances (0 at every source vertex).
inline std::vector<int> bfs_distances_multi(const EvenComplex& X,
                                            const std::vector<int>& sources) {
  std::vector<int> dist(X.vertex_count, -1);
  std::queue<int> q;
  for (int s : sources)
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push(s);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : X.vertex_edges[v]) {
      int w = X.edge_other(e, v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Combinatorial distance in the 1-skeleton.
inline int d1(const EvenComplex& X, int v, int w) {
  if (v == w) return 0;
  std::vector<int> dist = bfs_distances(X, v);
  return dist[w];
}

/// One shortest path from v to the nearest vertex in targets, tie-broken
/// toward smaller vertex ids at every hop (deterministic).
inline std::vector<int> shortest_path_to_set(const EvenComplex& X, int v,
                                             const std::vector<char>& target) {
  std::vector<int> dist(X.vertex_count, -1), parent(X.vertex_count, -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  int hit = target[v] ? v : -1;
  while (!q.empty() && hit < 0) {
    int u = q.front();
    q.pop();
    // vertex_edges is ascending by edge id; neighbor order is deterministic.
    for (int e : X.vertex_edges[u]) {
      int w = X.edge_other(e, u);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        if (target[w]) {
          hit = w;
          break;
        }
        q.push(w);
      }
    }
  }
  std::vector<int> path;
  for (int u = hit; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;  // empty when no target is reachable
}

}  // namespace e2w
