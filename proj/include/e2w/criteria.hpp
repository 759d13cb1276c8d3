#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "e2w/angle.hpp"
#include "e2w/complex.hpp"
#include "e2w/errors.hpp"
#include "e2w/link.hpp"
#include "e2w/metric.hpp"
#include "e2w/truncation.hpp"
#include "e2w/walls.hpp"

namespace e2w {

/// The cell parameter p for which a face's corner angle equals (p-1)/p * pi
/// under the given weights: p = n untouched, the truncation of n, or 3.
inline int cell_parameter(int half_sides, WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::Original:
      return half_sides;
    case WeightScheme::Truncated:
      return q_of(half_sides);
    case WeightScheme::LargeType:
      require(half_sides >= 3, ErrorCode::SchemeViolation,
              "large-type weights require all cells to have at least 6 sides");
      return 3;
  }
  return half_sides;
}

/// Angle at v between a direction y into cell P (a point on P's corner arc
/// in the link of v) and a direction x leaving P: the link geodesic from y
/// must exit P's corner through one of its endpoints u1, u2, so the angle is
/// min(angle(y,u1) + angle(u1,x), angle(y,u2) + angle(u2,x), pi).
inline Angle composite_angle(const EvenComplex& X, int v, int face,
                             const LinkPoint& y, const LinkPoint& x,
                             WeightScheme scheme) {
  LinkGraph L = link(X, v, scheme);
  int arc = L.arc_of_face(face);
  require(arc >= 0, ErrorCode::PreconditionViolated,
          "v is not a corner of the cell");
  const LinkArc& corner = L.arcs[arc];

  Rat to_a;  // distance from y to corner endpoint a, along the corner
  if (y.is_node()) {
    require(y.node == corner.a || y.node == corner.b,
            ErrorCode::PreconditionViolated,
            "y-direction does not point into the cell");
    to_a = (y.node == corner.a) ? Rat(0) : corner.weight;
  } else {
    require(y.arc == arc, ErrorCode::PreconditionViolated,
            "y-direction does not point into the cell");
    require(y.offset >= Rat(0) && y.offset <= corner.weight,
            ErrorCode::PreconditionViolated, "y-direction offset out of range");
    to_a = y.offset;
  }
  if (!x.is_node())
    require(x.arc != arc || x.offset == Rat(0) || x.offset == corner.weight,
            ErrorCode::DirectionInsideCell,
            "x-direction points into the cell's corner");

  Angle via_a = capped_add(capped(to_a),
                           link_distance(L, LinkPoint::at_node(corner.a), x));
  Angle via_b = capped_add(capped(corner.weight - to_a),
                           link_distance(L, LinkPoint::at_node(corner.b), x));
  return std::min(via_a, via_b);
}

/// Direction at v of the in-cell geodesic from v to the wall's mirror inside
/// carrier face P: a point on P's corner arc at v, placed at the exact
/// projection angles. near/far are the ids of v's neighbours in P.
struct CellDirection {
  int face = -1;
  LinkPoint point;
  MirrorProjection projection;
  int near = -1, far = -1;
};

inline CellDirection cell_direction(const EvenComplex& X, const LinkGraph& L,
                                    const WallSet& ws, int v, int wall,
                                    int face, WeightScheme scheme) {
  require(wall >= 0 && wall < ws.wall_count, ErrorCode::PreconditionViolated,
          "no such wall");
  const Wall& W = ws.walls[wall];
  require(std::binary_search(W.carrier_faces.begin(), W.carrier_faces.end(),
                             face),
          ErrorCode::PreconditionViolated,
          "cell does not belong to the wall's carrier");
  int pos = X.position_in_face(face, v);
  require(pos >= 0, ErrorCode::PreconditionViolated,
          "v is not a corner of the cell");
  const Mirror* m = nullptr;
  for (const Mirror& cand : W.mirrors)
    if (cand.face == face) m = &cand;
  require(m != nullptr, ErrorCode::Internal, "carrier cell without a mirror");

  int sides = static_cast<int>(X.faces[face].size());
  const DevelopedCell& cell =
      develop_cell(sides, cell_parameter(sides / 2, scheme));
  CellDirection d;
  d.face = face;
  d.projection = project_vertex_to_mirror(cell, pos, m->pos_a);
  d.near = X.faces[face][d.projection.near_vertex];
  d.far = X.faces[face][d.projection.far_vertex];

  int arc = L.arc_of_face(face);
  require(arc >= 0, ErrorCode::Internal, "cell missing from the link");
  const LinkArc& corner = L.arcs[arc];
  int near_node = L.node_of_edge(X.edge_between(v, d.near));
  require(near_node == corner.a || near_node == corner.b, ErrorCode::Internal,
          "corner arc does not touch the near edge");
  Rat off = d.projection.near_side.ratio();
  d.point = LinkPoint::on_arc(
      arc, near_node == corner.a ? off : corner.weight - off);
  return d;
}

/// All directions from v toward a wall it can see from inside its carrier:
/// one per carrier cell containing v. Empty iff v is not a carrier vertex.
inline std::vector<CellDirection> wall_directions(const EvenComplex& X,
                                                  const LinkGraph& L,
                                                  const WallSet& ws, int v,
                                                  int wall,
                                                  WeightScheme scheme) {
  std::vector<CellDirection> out;
  for (int f : ws.walls[wall].carrier_faces)
    if (X.position_in_face(f, v) >= 0)
      out.push_back(cell_direction(X, L, ws, v, wall, f, scheme));
  return out;
}

/// Bounding-cell test for the wall dual to [v, x] against wall W, seen from
/// carrier cell P of W at v. Returns the neighbours u of v in P for which
/// some cell with corner u-v-x has parameter p with pi/p greater than the
/// angle between u and the projection direction. An empty list certifies
/// that the wall dual to [v, x] cannot intersect W.
inline std::vector<int> bounding_cell_criterion(
    const EvenComplex& X, const WallSet& ws, int v, int x, int wall, int face,
    WeightScheme scheme = WeightScheme::Truncated) {
  int e_vx = X.edge_between(v, x);
  require(e_vx >= 0, ErrorCode::PreconditionViolated, "x is not adjacent to v");
  for (int e : X.face_edges[face])
    require(e != e_vx, ErrorCode::PreconditionViolated,
            "the edge [v, x] lies in the cell itself");

  LinkGraph L = link(X, v, scheme);
  CellDirection d = cell_direction(X, L, ws, v, wall, face, scheme);

  std::vector<int> out;
  const std::pair<int, Angle> sides[2] = {{d.near, d.projection.near_side},
                                          {d.far, d.projection.far_side}};
  for (const auto& [u, angle] : sides) {
    int e_vu = X.edge_between(v, u);
    bool qualifies = false;
    for (int f : X.edge_faces[e_vu]) {
      const auto& fe = X.face_edges[f];
      if (std::find(fe.begin(), fe.end(), e_vx) == fe.end()) continue;
      int p = cell_parameter(static_cast<int>(X.faces[f].size()) / 2, scheme);
      if (Rat(1, p) > angle.ratio()) qualifies = true;
    }
    if (qualifies) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Disjointness { Disjoint, Unknown };

/// Angle test for wall disjointness at a common carrier vertex v: if the
/// angle at v between the projection directions toward the two walls is pi
/// for every pair of carrier cells realizing them, the walls are disjoint.
/// Only configurations where both directions resolve inside single cells at
/// v are decided; anything else raises DirectionsNotComputable.
inline Disjointness disjointness_predicts(
    const EvenComplex& X, const WallSet& ws, int v, int wall_a, int wall_b,
    WeightScheme scheme = WeightScheme::Truncated) {
  require(wall_a >= 0 && wall_a < ws.wall_count && wall_b >= 0 &&
              wall_b < ws.wall_count,
          ErrorCode::PreconditionViolated, "no such wall");
  LinkGraph L = link(X, v, scheme);
  std::vector<CellDirection> da = wall_directions(X, L, ws, v, wall_a, scheme);
  std::vector<CellDirection> db = wall_directions(X, L, ws, v, wall_b, scheme);
  require(!da.empty() && !db.empty(), ErrorCode::DirectionsNotComputable,
          "v must lie in the carriers of both walls");

  for (const CellDirection& a : da)
    for (const CellDirection& b : db)
      if (!link_distance(L, a.point, b.point).is_pi())
        return Disjointness::Unknown;
  return Disjointness::Disjoint;
}

}  // namespace e2w
