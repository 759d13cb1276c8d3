#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "e2w/angle.hpp"
#include "e2w/complex.hpp"
#include "e2w/errors.hpp"
#include "e2w/homology.hpp"
#include "e2w/link.hpp"

namespace e2w {

/// Ball of a vertex-homogeneous tiling. config lists the face side counts
/// around every interior vertex in cyclic order; supported configurations
/// are uniform ([2n, 2n, ..., 2n]) and alternating ([a, b, a, b, ...]).
/// radius counts face layers (radius 1 = a single cell). Deterministic,
/// no randomness involved.
struct TilingSpec {
  std::vector<int> config;
  int radius = 1;

  static TilingSpec uniform(int faces_per_vertex, int gon, int radius) {
    TilingSpec s;
    s.config.assign(faces_per_vertex, gon);
    s.radius = radius;
    return s;
  }
  static TilingSpec alternating(int faces_per_vertex, int gon_a, int gon_b,
                                int radius) {
    TilingSpec s;
    for (int i = 0; i < faces_per_vertex; ++i)
      s.config.push_back(i % 2 ? gon_b : gon_a);
    s.radius = radius;
    return s;
  }
};

/// Random disc growth: faces with side counts drawn from palette are glued
/// to the boundary one at a time; every gluing keeps the complex a disc and
/// is accepted only if the links it closes stay non-positively curved.
struct GrowthSpec {
  std::uint64_t seed = 0;
  std::vector<int> palette;  // even side counts >= 4
  int target_faces = 1;
  int max_attempts = 2000;  // rejected attempts before giving up
  int max_reseeds = 4;      // restarts if the global re-check fails
};

namespace detail {

/// Shared disc-growth state: faces plus a doubly-linked boundary cycle.
/// Faces are attached along a contiguous path of boundary edges; the rest
/// of the new face is fresh, so the complex stays a disc throughout.
struct DiscBuilder {
  std::vector<std::vector<int>> faces;
  std::vector<int> next, prev;      // boundary cycle links (-1 off boundary)
  std::vector<int> faces_at;        // face count per vertex
  std::vector<int> bsize;           // side count of the face on edge (v, next[v])
  std::vector<Rat> angle_at;        // accumulated corner weight (original)
  int vertices = 0;

  bool on_boundary(int v) const { return next[v] >= 0; }

  int fresh_vertex() {
    next.push_back(-1);
    prev.push_back(-1);
    faces_at.push_back(0);
    bsize.push_back(0);
    angle_at.push_back(Rat(0));
    return vertices++;
  }

  void start_face(int sides) {
    std::vector<int> cycle(sides);
    for (int i = 0; i < sides; ++i) cycle[i] = fresh_vertex();
    for (int i = 0; i < sides; ++i) {
      next[cycle[i]] = cycle[(i + 1) % sides];
      prev[cycle[(i + 1) % sides]] = cycle[i];
      faces_at[cycle[i]] = 1;
      bsize[cycle[i]] = sides;
      angle_at[cycle[i]] = Rat(sides / 2 - 1, sides / 2);
    }
    faces.push_back(std::move(cycle));
  }

  /// Boundary path of `len` edges starting at `start` (in next direction).
  std::vector<int> path_vertices(int start, int len) const {
    std::vector<int> p{start};
    for (int i = 0, v = start; i < len; ++i) p.push_back(v = next[v]);
    return p;
  }

  /// Glue a `sides`-gon along the path; interior path vertices leave the
  /// boundary. Returns the ids of the vertices so closed.
  std::vector<int> attach(int start, int len, int sides) {
    require(sides > len, ErrorCode::Internal, "face cannot span glue path");
    std::vector<int> p = path_vertices(start, len);
    int tail = p.back();
    std::vector<int> cycle = p;
    int fresh_count = sides - len - 1;
    std::vector<int> fresh(fresh_count);
    for (int i = 0; i < fresh_count; ++i) cycle.push_back(fresh[i] = fresh_vertex());

    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      int w = p[i];
      next[w] = prev[w] = -1;  // closed: leaves the boundary
    }
    // New boundary arc runs start -> fresh(last..first) -> tail.
    int at = start;
    for (int i = fresh_count - 1; i >= 0; --i) {
      next[at] = fresh[i];
      prev[fresh[i]] = at;
      bsize[at] = sides;
      at = fresh[i];
    }
    next[at] = tail;
    prev[tail] = at;
    bsize[at] = sides;

    Rat w(sides / 2 - 1, sides / 2);
    for (int v : p) {
      ++faces_at[v];
      angle_at[v] += w;
    }
    for (int v : fresh) {
      faces_at[v] = 1;
      angle_at[v] = w;
    }
    faces.push_back(std::move(cycle));
    return std::vector<int>(p.begin() + 1, p.end() - 1);
  }

  int boundary_length() const {
    int len = 0;
    for (int v = 0; v < vertices; ++v)
      if (on_boundary(v)) ++len;
    return len;
  }
};

inline void validate_config(const std::vector<int>& config) {
  require(!config.empty(), ErrorCode::SpecViolation, "empty configuration");
  Rat total(0);
  for (int g : config) {
    require(g >= 4 && g % 2 == 0, ErrorCode::SpecViolation,
            "face side counts must be even and at least 4");
    total += Rat(g / 2 - 1, g / 2);
  }
  require(total >= Rat(2), ErrorCode::SpecViolation,
          "vertex configuration is positively curved: corner angles sum to " +
              pi_string(total) + " < 2*pi");
  bool uniform = true, alternating = true;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i] != config[0]) uniform = false;
    if (config[i] != config[i % 2]) alternating = false;
  }
  if (!uniform)
    require(alternating && config.size() % 2 == 0, ErrorCode::SpecViolation,
            "only uniform or alternating vertex configurations are supported");
}

}  // namespace detail

/// Ball of the tiling described by spec.config, grown face layer by face
/// layer. Every vertex interior to the ball acquires exactly the prescribed
/// configuration; ambiguities at corners resolve toward closing the vertex
/// with the smallest id first, which makes the output deterministic.
inline EvenComplex tiling_ball(const TilingSpec& spec, std::string name = {}) {
  detail::validate_config(spec.config);
  require(spec.radius >= 1, ErrorCode::SpecViolation, "radius must be >= 1");
  int k = static_cast<int>(spec.config.size());
  bool uniform = std::all_of(spec.config.begin(), spec.config.end(),
                             [&](int g) { return g == spec.config[0]; });
  auto complement = [&spec](int gon) {
    return gon == spec.config[0] ? spec.config[1] : spec.config[0];
  };

  detail::DiscBuilder b;
  b.start_face(spec.config[0]);

  for (int layer = 2; layer <= spec.radius; ++layer) {
    std::set<int> pending;
    for (int v = 0; v < b.vertices; ++v)
      if (b.on_boundary(v)) pending.insert(v);
    while (!pending.empty()) {
      int v = *pending.begin();
      if (!b.on_boundary(v)) {
        pending.erase(pending.begin());
        continue;
      }
      int def = k - b.faces_at[v];
      require(def >= 1, ErrorCode::Internal,
              "boundary vertex with no missing faces");

      // Glue path: the edge arriving at v, plus the departing edge when
      // this is v's final face; extend over any endpoint that this face
      // must simultaneously close (deficiency exactly 1).
      int start = b.prev[v];
      int len = 1;
      if (def == 1) ++len;
      while (k - b.faces_at[start] == 1) {
        start = b.prev[start];
        ++len;
      }
      if (def == 1) {
        int end = b.path_vertices(start, len).back();
        while (k - b.faces_at[end] == 1) {
          end = b.next[end];
          ++len;
        }
      }

      int gon = uniform ? spec.config[0] : complement(b.bsize[start]);
      if (!uniform) {
        std::vector<int> pv = b.path_vertices(start, len);
        for (std::size_t i = 0; i + 1 < pv.size(); ++i)
          require(complement(b.bsize[pv[i]]) == gon, ErrorCode::Internal,
                  "inconsistent face sizes along glue path");
      }
      for (int closed : b.attach(start, len, gon)) {
        require(b.faces_at[closed] == k, ErrorCode::Internal,
                "closed vertex with wrong face count");
        pending.erase(closed);
      }
      if (!b.on_boundary(v) || k - b.faces_at[v] == 0) pending.erase(v);
    }
  }
  return build_complex(b.faces, std::move(name));
}

/// Seeded random disc: faces drawn from the palette are glued to random
/// stretches of the boundary. A gluing that closes a vertex is accepted only
/// when the closed link has total angle >= 2*pi under the original weights
/// (which also rules out doubled arcs, whose cycles are shorter than 2*pi).
/// Emitted complexes always pass the link condition and the homology proxy;
/// the final re-verification is a safety net that reseeds if it ever failed.
inline EvenComplex grow_random(const GrowthSpec& spec, std::string name = {}) {
  require(!spec.palette.empty(), ErrorCode::SpecViolation, "empty palette");
  for (int g : spec.palette)
    require(g >= 4 && g % 2 == 0, ErrorCode::SpecViolation,
            "palette side counts must be even and at least 4");
  require(spec.target_faces >= 1, ErrorCode::SpecViolation,
          "target face count must be >= 1");

  for (int attempt = 0; attempt <= spec.max_reseeds; ++attempt) {
    std::mt19937_64 rng(spec.seed + static_cast<std::uint64_t>(attempt));
    detail::DiscBuilder b;
    auto pick_gon = [&]() {
      return spec.palette[rng() % spec.palette.size()];
    };
    b.start_face(pick_gon());

    int rejections = 0;
    bool stalled = false;
    while (static_cast<int>(b.faces.size()) < spec.target_faces) {
      if (rejections > spec.max_attempts) {
        stalled = true;
        break;
      }
      // Uniform random boundary edge: random boundary vertex as its tail.
      std::vector<int> boundary;
      for (int v = 0; v < b.vertices; ++v)
        if (b.on_boundary(v)) boundary.push_back(v);
      int start = boundary[rng() % boundary.size()];
      int gon = pick_gon();
      int len = 1 + static_cast<int>(rng() % 2);  // glue along 1 or 2 edges
      if (len >= static_cast<int>(boundary.size()) || gon - len < 2) {
        ++rejections;
        continue;
      }
      // A length-2 path closes its middle vertex; only allowed when the
      // resulting link cycle is long enough.
      if (len == 2) {
        int mid = b.next[start];
        Rat closed = b.angle_at[mid] + Rat(gon / 2 - 1, gon / 2);
        if (closed < Rat(2)) {
          ++rejections;
          continue;
        }
      }
      b.attach(start, len, gon);
      rejections = 0;
    }
    if (stalled) {
      if (attempt == spec.max_reseeds)
        fail(ErrorCode::GrowthStalled,
             "no legal gluing found within the attempt budget");
      continue;
    }

    EvenComplex X = build_complex(b.faces, name);
    if (check_link_condition(X, WeightScheme::Original).pass &&
        homology_proxy_check(X).pass())
      return X;
    // Fall through: reseed and regrow (never emit a failing complex).
  }
  fail(ErrorCode::GrowthStalled,
       "re-verification kept failing across reseeds");
}

/// Named generator presets.
struct Preset {
  std::string name;
  TilingSpec spec;  // radius field holds the preset's default radius
};

inline const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> presets = {
      {"square_grid", TilingSpec::uniform(4, 4, 5)},
      {"hex", TilingSpec::uniform(3, 6, 4)},
      {"oct3", TilingSpec::uniform(3, 8, 5)},
      {"sq5", TilingSpec::uniform(5, 4, 5)},
      {"mixed_46", TilingSpec::alternating(4, 4, 6, 4)},
  };
  return presets;
}

inline EvenComplex make_preset(const std::string& name, int radius = 0) {
  for (const Preset& p : preset_catalog())
    if (p.name == name) {
      TilingSpec s = p.spec;
      if (radius > 0) s.radius = radius;
      return tiling_ball(s, name);
    }
  fail(ErrorCode::ParseError, "unknown preset: " + name);
}

}  // namespace e2w
