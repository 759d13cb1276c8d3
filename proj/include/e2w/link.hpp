#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "e2w/angle.hpp"
#include "e2w/complex.hpp"
#include "e2w/errors.hpp"
#include "e2w/truncation.hpp"

namespace e2w {

/// Corner weights assigned to link arcs. Original is the regular Euclidean
/// polygon angle (n-1)pi/n; Truncated replaces n by q(n); LargeType uses the
/// uniform hexagon angle 2pi/3 and is only meaningful on squareless
/// complexes.
enum class WeightScheme { Original, Truncated, LargeType };

inline const char* to_string(WeightScheme s) {
  switch (s) {
    case WeightScheme::Original: return "original";
    case WeightScheme::Truncated: return "truncated";
    case WeightScheme::LargeType: return "largetype";
  }
  return "?";
}

/// Arc weight (multiple of pi) contributed by a 2n-gon corner.
inline Rat corner_weight(int n, WeightScheme scheme) {
  require(n >= 2, ErrorCode::InvalidN, "corner of a 2n-gon needs n >= 2");
  switch (scheme) {
    case WeightScheme::Original: return Rat(n - 1, n);
    case WeightScheme::Truncated: {
      int q = q_of(n);
      return Rat(q - 1, q);
    }
    case WeightScheme::LargeType:
      require(n >= 3, ErrorCode::SchemeViolation,
              "large-type weights are undefined on squares");
      return Rat(2, 3);
  }
  fail(ErrorCode::Internal, "unknown scheme");
}

/// One corner of a 2-cell at the link's vertex, joining the two link nodes
/// (= incident edges of the complex) that the cell consumes there.
struct LinkArc {
  int a = -1, b = -1;  // node indices
  Rat weight{0};
  int face = -1;
};

/// The metric graph Lk(v): nodes are the edges of the complex at v (in
/// ascending edge id order), arcs are the corners of the 2-cells at v.
struct LinkGraph {
  int vertex = -1;
  std::vector<int> node_edges;  // complex edge id per node
  std::vector<LinkArc> arcs;

  int node_count() const { return static_cast<int>(node_edges.size()); }

  int node_of_edge(int e) const {
    auto it = std::lower_bound(node_edges.begin(), node_edges.end(), e);
    if (it == node_edges.end() || *it != e) return -1;
    return static_cast<int>(it - node_edges.begin());
  }

  int arc_of_face(int f) const {
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
      if (arcs[i].face == f) return i;
    return -1;
  }
};

inline LinkGraph link(const EvenComplex& X, int v, WeightScheme scheme) {
  LinkGraph L;
  L.vertex = v;
  L.node_edges = X.vertex_edges[v];  // already ascending
  for (int e : L.node_edges)
    for (int f : X.edge_faces[e]) {
      int pos = X.position_in_face(f, v);
      int sides = static_cast<int>(X.faces[f].size());
      int prev = X.faces[f][(pos + sides - 1) % sides];
      int next = X.faces[f][(pos + 1) % sides];
      int ea = X.edge_between(prev, v), eb = X.edge_between(v, next);
      if (e != std::min(ea, eb)) continue;  // emit each corner once
      LinkArc arc;
      arc.a = L.node_of_edge(std::min(ea, eb));
      arc.b = L.node_of_edge(std::max(ea, eb));
      arc.weight = corner_weight(sides / 2, scheme);
      arc.face = f;
      L.arcs.push_back(arc);
    }
  return L;
}

/// No loops and no doubled arcs (two cells consuming the same edge pair).
inline bool is_simplicial(const LinkGraph& L) {
  std::vector<std::pair<int, int>> seen;
  for (const LinkArc& arc : L.arcs) {
    if (arc.a == arc.b) return false;
    seen.emplace_back(std::min(arc.a, arc.b), std::max(arc.a, arc.b));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace detail {

// adj[node] = (neighbor, weight, arc index)
using LinkAdj = std::vector<std::vector<std::tuple<int, Rat, int>>>;

inline LinkAdj link_adjacency(const LinkGraph& L) {
  LinkAdj adj(L.node_count());
  for (int i = 0; i < static_cast<int>(L.arcs.size()); ++i) {
    const LinkArc& arc = L.arcs[i];
    adj[arc.a].emplace_back(arc.b, arc.weight, i);
    adj[arc.b].emplace_back(arc.a, arc.weight, i);
  }
  return adj;
}

/// Exact Dijkstra; ties resolved toward smaller node ids by the queue
/// ordering. banned_arc < 0 disables the exclusion.
inline std::optional<Rat> link_dijkstra(const LinkAdj& adj, int s, int t,
                                        int banned_arc) {
  std::vector<std::optional<Rat>> dist(adj.size());
  using Item = std::pair<Rat, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[s] = Rat(0);
  pq.emplace(Rat(0), s);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (!dist[u] || *dist[u] < d) continue;
    if (u == t) return d;
    for (const auto& [w, len, arc] : adj[u]) {
      if (arc == banned_arc) continue;
      Rat nd = d + len;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Length of a shortest embedded cycle (multiple of pi); nullopt when the
/// link is a forest. Standard arc-deletion sweep: for every arc, the arc
/// weight plus the shortest path between its endpoints avoiding the arc.
inline std::optional<Rat> girth(const LinkGraph& L) {
  detail::LinkAdj adj = detail::link_adjacency(L);
  std::optional<Rat> best;
  for (int i = 0; i < static_cast<int>(L.arcs.size()); ++i) {
    const LinkArc& arc = L.arcs[i];
    auto rest = detail::link_dijkstra(adj, arc.a, arc.b, i);
    if (!rest) continue;
    Rat c = arc.weight + *rest;
    if (!best || c < *best) best = c;
  }
  return best;
}

/// Independent oracle for small links: depth-first enumeration of all simple
/// cycles (distinct nodes, distinct arcs; doubled arcs count as 2-cycles).
inline std::optional<Rat> girth_bruteforce(const LinkGraph& L) {
  detail::LinkAdj adj = detail::link_adjacency(L);
  int n = L.node_count();
  require(n <= 14, ErrorCode::Internal, "brute-force girth is for small links");
  std::optional<Rat> best;
  std::vector<char> visited(n, 0);

  // Cycles are rooted at their smallest node s; interior nodes must be > s.
  auto consider = [&best](const Rat& c) {
    if (!best || c < *best) best = c;
  };
  for (const LinkArc& arc : L.arcs)
    if (arc.a == arc.b) consider(arc.weight);  // degenerate loop

  std::function<void(int, int, int, const Rat&)> dfs =
      [&](int s, int u, int in_arc, const Rat& len) {
        for (const auto& [w, weight, arcid] : adj[u]) {
          if (arcid == in_arc) continue;
          if (w == s && u != s) {
            consider(len + weight);
            continue;
          }
          if (w <= s || visited[w]) continue;
          visited[w] = 1;
          dfs(s, w, arcid, len + weight);
          visited[w] = 0;
        }
      };
  for (int s = 0; s < n; ++s) dfs(s, s, -1, Rat(0));
  return best;
}

/// A point of the link: either a node, or an interior point of an arc at a
/// given offset (multiple of pi) from the arc's a-endpoint. Offsets equal to
/// 0 or the arc weight normalize to the corresponding node.
struct LinkPoint {
  int node = -1;
  int arc = -1;
  Rat offset{0};

  static LinkPoint at_node(int n) {
    LinkPoint p;
    p.node = n;
    return p;
  }
  static LinkPoint on_arc(int arc, Rat offset) {
    LinkPoint p;
    p.arc = arc;
    p.offset = offset;
    return p;
  }
  bool is_node() const { return node >= 0; }
};

/// Alexandrov angle between two directions at the link's vertex: the link
/// path distance capped at pi. Interior points are handled by splitting
/// their host arcs.
inline Angle link_distance(const LinkGraph& L, LinkPoint p, LinkPoint q) {
  // Normalize interior points sitting on arc endpoints.
  auto normalize = [&L](LinkPoint& x) {
    if (x.is_node()) {
      require(x.node < L.node_count(), ErrorCode::Internal, "bad link node");
      return;
    }
    require(x.arc >= 0 && x.arc < static_cast<int>(L.arcs.size()),
            ErrorCode::Internal, "bad link arc");
    const LinkArc& a = L.arcs[x.arc];
    require(x.offset >= Rat(0) && x.offset <= a.weight, ErrorCode::Internal,
            "arc offset out of range");
    if (x.offset == Rat(0)) x = LinkPoint::at_node(a.a);
    if (!x.is_node() && x.offset == a.weight) x = LinkPoint::at_node(a.b);
  };
  normalize(p);
  normalize(q);

  int n = L.node_count();
  detail::LinkAdj adj(n + 2);
  // Interior insertion points per arc, as (offset, temp node id).
  std::vector<std::vector<std::pair<Rat, int>>> splits(L.arcs.size());
  int next = n;
  int ps = p.is_node() ? p.node : next++;
  if (!p.is_node()) splits[p.arc].emplace_back(p.offset, ps);
  int qs;
  if (q.is_node()) {
    qs = q.node;
  } else if (!p.is_node() && q.arc == p.arc && q.offset == p.offset) {
    qs = ps;  // same interior point
  } else {
    qs = next++;
    splits[q.arc].emplace_back(q.offset, qs);
  }

  for (int i = 0; i < static_cast<int>(L.arcs.size()); ++i) {
    const LinkArc& arc = L.arcs[i];
    auto& sp = splits[i];
    std::sort(sp.begin(), sp.end());
    int at = arc.a;
    Rat off(0);
    for (const auto& [o, node] : sp) {
      adj[at].emplace_back(node, o - off, i);
      adj[node].emplace_back(at, o - off, i);
      at = node;
      off = o;
    }
    adj[at].emplace_back(arc.b, arc.weight - off, i);
    adj[arc.b].emplace_back(at, arc.weight - off, i);
  }

  auto d = detail::link_dijkstra(adj, ps, qs, -1);
  if (!d) return Angle::pi();  // directions in different link components
  return capped(*d);
}

/// Per-vertex outcome of the non-positive-curvature link test.
struct VertexLinkReport {
  int vertex = -1;
  bool simplicial = false;
  std::optional<Rat> girth;  // nullopt = forest (infinite girth)
  bool pass = false;
};

struct LinkConditionReport {
  bool pass = true;
  int vertices_checked = 0;
  std::vector<VertexLinkReport> failures;
};

inline VertexLinkReport check_vertex_link(const EvenComplex& X, int v,
                                          WeightScheme scheme) {
  VertexLinkReport r;
  r.vertex = v;
  LinkGraph L = link(X, v, scheme);
  r.simplicial = is_simplicial(L);
  r.girth = girth(L);
  r.pass = r.simplicial && (!r.girth || *r.girth >= Rat(2));
  return r;
}

/// The whole-complex link condition: every vertex link is simplicial with
/// girth at least 2pi under the chosen weights.
inline LinkConditionReport check_link_condition(const EvenComplex& X,
                                                WeightScheme scheme) {
  if (scheme == WeightScheme::LargeType)
    require(!shapes(X).count(4), ErrorCode::SchemeViolation,
            "large-type weights require a squareless complex");
  LinkConditionReport rep;
  rep.vertices_checked = X.vertex_count;
  for (int v = 0; v < X.vertex_count; ++v) {
    VertexLinkReport r = check_vertex_link(X, v, scheme);
    if (!r.pass) {
      rep.pass = false;
      rep.failures.push_back(r);
    }
  }
  return rep;
}

}  // namespace e2w
