#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "e2w/angle.hpp"
#include "e2w/errors.hpp"
#include "e2w/truncation.hpp"

namespace e2w {

/// Metric data of a 2q-truncated 2n-gon: the cell is assembled from 4n
/// right triangles around the center, each spanning half an edge. The center
/// angle per half-edge is pi/(2q); with q < n the total center angle exceeds
/// 2pi, so positions are tracked as exact cumulative angles per sector
/// rather than global planar coordinates.
struct DevelopedCell {
  int gon = 0;  // 2n
  int n = 0;
  int q = 0;
  double radius_vertex = 0;    // center to polygon vertex
  double radius_midpoint = 0;  // center to edge midpoint (mirror endpoint)

  Rat corner() const { return Rat(q - 1, q); }              // vertex angle
  Rat half_sector() const { return Rat(1, 2 * q); }         // per half-edge
  Rat total_center_angle() const { return Rat(2 * n, q); }  // >= 2

  /// Cumulative center angle of vertex i (i edges from vertex 0).
  Rat vertex_center_angle(int i) const { return Rat(i, q); }
  /// Cumulative center angle of the midpoint of edge (i, i+1).
  Rat midpoint_center_angle(int i) const { return Rat(2 * i + 1, 2 * q); }

  /// Largest denominator an exact angle arising in this cell can need.
  long long snap_denominator() const { return 2 * std::lcm(2 * q, 2 * n); }
};

/// Cached immutable geometry table, one entry per (2n, q).
inline const DevelopedCell& develop_cell(int gon, int q) {
  require(gon >= 4 && gon % 2 == 0, ErrorCode::InvalidN,
          "cells are 2n-gons with n >= 2");
  int n = gon / 2;
  require(q >= 2, ErrorCode::InvalidN, "truncation parameter must be >= 2");
  require(q <= n, ErrorCode::InvalidN,
          "truncation parameter exceeds half-side count: cell would be "
          "positively curved");
  static std::map<std::pair<int, int>, DevelopedCell> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({gon, q});
  if (fresh) {
    DevelopedCell& c = it->second;
    c.gon = gon;
    c.n = n;
    c.q = q;
    double half = M_PI / (2 * q);
    c.radius_vertex = 0.5 / std::sin(half);
    c.radius_midpoint = 0.5 / std::tan(half);
  }
  return it->second;
}

/// Where a cell vertex projects onto a mirror of the cell, in the truncated
/// metric. k is the combinatorial parameter: the boundary distance from the
/// vertex to the mirror is k + 1/2 edges. The projection hits the cell
/// center exactly when 2k+1 >= q; otherwise it lands in the interior of the
/// mirror segment on the near side. near/far are the angles at the vertex
/// between the projection direction and the two adjacent boundary vertices.
struct MirrorProjection {
  bool center = false;
  int k = 0;
  Angle near_side, far_side;
  int near_vertex = -1, far_vertex = -1;  // adjacent boundary vertex indices
};

namespace detail {

/// Boundary positions in half-edge units (cycle length 4n): vertex i sits at
/// 2i, the midpoint of edge (i, i+1) at 2i+1. Returns (k, toward_successor)
/// for the nearest crossing midpoint of mirror m.
inline std::pair<int, bool> mirror_k(const DevelopedCell& c, int vertex,
                                     int mirror) {
  int len = 4 * c.n;
  auto cyc = [len](int a, int b) {
    int d = std::abs(a - b) % len;
    return std::min(d, len - d);
  };
  // Forward distance (increasing index direction) decides the near side.
  auto fwd = [len](int from, int to) { return ((to - from) % len + len) % len; };
  int vpos = 2 * vertex;
  int best_d = len, best_fwd = 0;
  for (int e : {mirror, mirror + c.n}) {
    int mpos = 2 * e + 1;
    int d = cyc(vpos, mpos);
    if (d < best_d) {
      best_d = d;
      best_fwd = (fwd(vpos, mpos) == d);
    }
  }
  return {(best_d - 1) / 2, best_fwd != 0};
}

}  // namespace detail

inline MirrorProjection project_vertex_to_mirror(const DevelopedCell& c,
                                                 int vertex, int mirror) {
  require(mirror >= 0 && mirror < c.gon, ErrorCode::MirrorNotInCell,
          "mirror index outside cell");
  require(vertex >= 0 && vertex < c.gon, ErrorCode::MirrorNotInCell,
          "vertex index outside cell");
  mirror %= c.n;

  auto [k, forward] = detail::mirror_k(c, vertex, mirror);
  MirrorProjection p;
  p.k = k;
  p.near_vertex = (vertex + (forward ? 1 : c.gon - 1)) % c.gon;
  p.far_vertex = (vertex + (forward ? c.gon - 1 : 1)) % c.gon;
  p.center = (2 * k + 1 >= c.q);
  if (p.center) {
    p.near_side = p.far_side = Angle(Rat(c.q - 1, 2 * c.q));
  } else {
    // Flatten the k+3-gon (vertex, intermediates, crossing, foot): angle sum
    // fixes the angle at the vertex to k*pi/q; the rest of the corner angle
    // (q-1)pi/q faces the far side.
    p.near_side = Angle(Rat(k, c.q));
    p.far_side = Angle(Rat(c.q - 1 - k, c.q));
  }
  return p;
}

/// Floating-point check of the same projection, by explicit Euclidean
/// development of the sectors between the vertex and the mirror. Used as an
/// independent oracle for the exact computation.
struct NumericProjection {
  bool center = false;
  double near_side = 0, far_side = 0;
};

inline NumericProjection project_vertex_to_mirror_numeric(
    const DevelopedCell& c, int vertex, int mirror) {
  require(mirror >= 0 && mirror < c.gon, ErrorCode::MirrorNotInCell,
          "mirror index outside cell");
  mirror %= c.n;
  auto [k, forward] = detail::mirror_k(c, vertex, mirror);
  (void)forward;
  double theta = (2 * k + 1) * M_PI / (2 * c.q);  // center angle to crossing
  double Rv = c.radius_vertex;

  auto angle_between = [](double ax, double ay, double bx, double by) {
    double dot = ax * bx + ay * by;
    double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
    double v = dot / (na * nb);
    v = std::max(-1.0, std::min(1.0, v));
    return std::acos(v);
  };

  NumericProjection r;
  // Beyond a development angle of pi/2 the perpendicular foot falls behind
  // the center; for heavily wrapped cells theta itself can exceed pi.
  r.center = theta >= M_PI - 1e-12 || Rv * std::cos(theta) <= 1e-12;
  // Lay the relevant sectors flat: center at the origin, the near crossing
  // direction along +x, the vertex at angle theta, its neighbors one full
  // edge (2 half-sectors) to either side.
  double vx = Rv * std::cos(theta), vy = Rv * std::sin(theta);
  double step = M_PI / c.q;
  double ux = Rv * std::cos(theta - step), uy = Rv * std::sin(theta - step);
  double wx = Rv * std::cos(theta + step), wy = Rv * std::sin(theta + step);
  double fx, fy;  // projection foot
  if (r.center) {
    fx = 0;
    fy = 0;
  } else {
    fx = Rv * std::cos(theta);  // foot of perpendicular onto the mirror line
    fy = 0;
  }
  r.near_side = angle_between(fx - vx, fy - vy, ux - vx, uy - vy);
  r.far_side = angle_between(fx - vx, fy - vy, wx - vx, wy - vy);
  return r;
}

/// Nearest rational multiple of pi with denominator at most max_den; raises
/// SnapFailed when nothing admissible lies within 1e-9 radians.
inline Angle snap_angle(double radians, long long max_den) {
  require(max_den >= 1, ErrorCode::Internal, "bad snap denominator");
  double x = radians / M_PI;
  long long bn = 0, bd = 1;
  double best = std::abs(x);  // candidate 0/1
  for (long long den = 1; den <= max_den; ++den) {
    long long num = std::llround(x * den);
    if (num < 0) num = 0;
    if (num > den) num = den;
    double diff = std::abs(x - static_cast<double>(num) / den);
    if (diff < best) {
      best = diff;
      bn = num;
      bd = den;
    }
  }
  require(best * M_PI <= 1e-9, ErrorCode::SnapFailed,
          "angle " + std::to_string(radians) +
              " is not an admissible rational multiple of pi");
  return Angle(Rat(bn, bd));
}

}  // namespace e2w
