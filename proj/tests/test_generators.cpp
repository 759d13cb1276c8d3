#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <algorithm>
#include <set>

#include "e2w/generators.hpp"
#include "e2w/homology.hpp"
#include "e2w/io.hpp"
#include "e2w/link.hpp"

using namespace e2w;

namespace {

// Faces incident to each vertex, and whether the vertex is interior
// (every incident edge is shared by two faces).
std::vector<std::vector<int>> faces_at_vertices(const EvenComplex& X) {
  std::vector<std::vector<int>> at(X.vertex_count);
  for (int f = 0; f < X.face_count(); ++f)
    for (int v : X.faces[f]) at[v].push_back(f);
  return at;
}

bool interior(const EvenComplex& X, int v) {
  for (int e : X.vertex_edges[v])
    if (X.edge_faces[e].size() != 2) return false;
  return true;
}

void check_interior_configuration(const EvenComplex& X,
                                  std::vector<int> config) {
  std::sort(config.begin(), config.end());
  auto at = faces_at_vertices(X);
  int interior_count = 0;
  for (int v = 0; v < X.vertex_count; ++v) {
    if (!interior(X, v)) continue;
    ++interior_count;
    std::vector<int> sizes;
    for (int f : at[v]) sizes.push_back(static_cast<int>(X.faces[f].size()));
    std::sort(sizes.begin(), sizes.end());
    INFO("vertex " << v);
    CHECK(sizes == config);
  }
  CHECK(interior_count > 0);
}

void check_sound(const EvenComplex& X) {
  CHECK(homology_proxy_check(X).pass());
  CHECK(check_link_condition(X, WeightScheme::Original).pass);
  CHECK(check_link_condition(X, WeightScheme::Truncated).pass);
}

std::set<std::vector<int>> normalized_face_set(const EvenComplex& X) {
  std::set<std::vector<int>> s;
  for (const auto& f : X.faces) s.insert(normalize_cycle(f));
  return s;
}

}  // namespace

TEST_CASE("square tiling balls are square grids") {
  for (int r = 1; r <= 4; ++r) {
    EvenComplex X = tiling_ball(TilingSpec::uniform(4, 4, r));
    INFO("radius " << r);
    // A radius-r ball in the square grid is a (2r-1) x (2r-1) block.
    int side = 2 * r - 1;
    CHECK(X.face_count() == side * side);
    CHECK(X.vertex_count == (side + 1) * (side + 1));
    CHECK(X.edge_count() == 2 * (side + 1) * side);
    CHECK(shapes(X) == std::set<int>{4});
    check_sound(X);
  }
  check_interior_configuration(tiling_ball(TilingSpec::uniform(4, 4, 3)),
                               {4, 4, 4, 4});
}

TEST_CASE("hexagon tiling balls have centered hexagonal face counts") {
  for (int r = 1; r <= 4; ++r) {
    EvenComplex X = tiling_ball(TilingSpec::uniform(3, 6, r));
    INFO("radius " << r);
    CHECK(X.face_count() == 3 * r * (r - 1) + 1);
    CHECK(shapes(X) == std::set<int>{6});
    check_sound(X);
  }
  check_interior_configuration(tiling_ball(TilingSpec::uniform(3, 6, 4)),
                               {6, 6, 6});
}

TEST_CASE("octagon tiling ball, three per vertex") {
  EvenComplex r2 = tiling_ball(TilingSpec::uniform(3, 8, 2));
  // Layer two: one octagon per corner of the core cell, where consecutive
  // corner cells share a spoke edge; eight octagons around the core.
  CHECK(r2.face_count() == 9);
  CHECK(r2.vertex_count == 48);
  CHECK(shapes(r2) == std::set<int>{8});
  check_sound(r2);

  EvenComplex r3 = tiling_ball(TilingSpec::uniform(3, 8, 3));
  CHECK(r3.face_count() > 4 * r2.face_count());  // hyperbolic growth
  check_interior_configuration(r3, {8, 8, 8});
  check_sound(r3);
}

TEST_CASE("five squares per vertex tiling ball") {
  EvenComplex X = tiling_ball(TilingSpec::uniform(5, 4, 3));
  CHECK(shapes(X) == std::set<int>{4});
  check_interior_configuration(X, {4, 4, 4, 4, 4});
  check_sound(X);
  // Vertex links of interior vertices have girth 5 * pi/2 > 2*pi.
  for (int v = 0; v < X.vertex_count; ++v) {
    if (!interior(X, v)) continue;
    auto g = girth(link(X, v, WeightScheme::Original));
    REQUIRE(g.has_value());
    CHECK(*g == Rat(5, 2));
  }
}

TEST_CASE("alternating square-hexagon tiling ball") {
  EvenComplex X = tiling_ball(TilingSpec::alternating(4, 4, 6, 3));
  CHECK(shapes(X) == std::set<int>{4, 6});
  check_interior_configuration(X, {4, 6, 4, 6});
  check_sound(X);
  // Alternation: faces sharing an edge always have different side counts.
  for (int e = 0; e < X.edge_count(); ++e) {
    const auto& fs = X.edge_faces[e];
    if (fs.size() == 2)
      CHECK(X.faces[fs[0]].size() != X.faces[fs[1]].size());
  }
  EvenComplex r2 = tiling_ball(TilingSpec::alternating(4, 4, 6, 2));
  CHECK(r2.face_count() == 9);
}

TEST_CASE("tiling balls are deterministic and nested by radius") {
  for (auto spec : {TilingSpec::uniform(3, 8, 3), TilingSpec::uniform(5, 4, 3),
                    TilingSpec::alternating(4, 4, 6, 3)}) {
    EvenComplex a = tiling_ball(spec);
    EvenComplex b = tiling_ball(spec);
    CHECK(to_json_string(a) == to_json_string(b));

    TilingSpec smaller = spec;
    smaller.radius = spec.radius - 1;
    auto inner = normalized_face_set(tiling_ball(smaller));
    auto outer = normalized_face_set(a);
    CHECK(std::includes(outer.begin(), outer.end(), inner.begin(),
                        inner.end()));
  }
}

TEST_CASE("tiling parameter validation") {
  // Corner angles must sum to at least 2*pi around a vertex.
  CHECK(fixtures::thrown_code([&] { tiling_ball(TilingSpec::uniform(3, 4, 2)); }) ==
        ErrorCode::SpecViolation);
  CHECK(fixtures::thrown_code([&] { tiling_ball(TilingSpec::uniform(2, 8, 2)); }) ==
        ErrorCode::SpecViolation);
  // Side counts must be even and at least 4.
  CHECK(fixtures::thrown_code([&] { tiling_ball(TilingSpec::uniform(4, 5, 2)); }) ==
        ErrorCode::SpecViolation);
  CHECK(fixtures::thrown_code([&] { tiling_ball(TilingSpec::uniform(4, 2, 2)); }) ==
        ErrorCode::SpecViolation);
  // Radius must be positive, configuration nonempty and alternating at most.
  TilingSpec bad = TilingSpec::uniform(4, 4, 0);
  CHECK(fixtures::thrown_code([&] { tiling_ball(bad); }) ==
        ErrorCode::SpecViolation);
  TilingSpec mixed;
  mixed.config = {4, 6, 8, 6};
  mixed.radius = 2;
  CHECK(fixtures::thrown_code([&] { tiling_ball(mixed); }) ==
        ErrorCode::SpecViolation);
  TilingSpec empty;
  empty.radius = 2;
  CHECK(fixtures::thrown_code([&] { tiling_ball(empty); }) ==
        ErrorCode::SpecViolation);
  // Boundary case: exactly 2*pi is legal (flat tilings).
  CHECK_NOTHROW(tiling_ball(TilingSpec::uniform(4, 4, 2)));
}

TEST_CASE("preset catalog") {
  CHECK(preset_catalog().size() == 5);
  CHECK(make_preset("oct3", 2).face_count() == 9);
  CHECK(make_preset("square_grid", 2).face_count() == 9);
  EvenComplex hex = make_preset("hex");  // default radius 4
  CHECK(hex.face_count() == 37);
  CHECK(hex.name == "hex");
  CHECK(shapes(make_preset("mixed_46", 2)) == std::set<int>{4, 6});
  CHECK(fixtures::thrown_code([&] { make_preset("nonagon"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("random growth is seed-deterministic and always sound") {
  GrowthSpec gs;
  gs.palette = {4, 6};
  gs.target_faces = 30;
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 7ull}) {
    gs.seed = seed;
    EvenComplex a = grow_random(gs);
    EvenComplex b = grow_random(gs);
    INFO("seed " << seed);
    CHECK(a.face_count() == 30);
    CHECK(to_json_string(a) == to_json_string(b));
    check_sound(a);
  }
  gs.seed = 1;
  std::string one = digest(grow_random(gs));
  gs.seed = 2;
  CHECK(digest(grow_random(gs)) != one);
}

TEST_CASE("random growth regression: seed 42, palette {4,6,8}, 60 faces") {
  GrowthSpec gs;
  gs.seed = 42;
  gs.palette = {4, 6, 8};
  gs.target_faces = 60;
  EvenComplex X = grow_random(gs);
  CHECK(X.face_count() == 60);
  CHECK(X.vertex_count == 222);
  CHECK(X.edge_count() == 281);
  CHECK(digest(X) == "a42672c2c534e08e");
  check_sound(X);
}

TEST_CASE("random growth edge cases and validation") {
  GrowthSpec gs;
  gs.palette = {4};
  gs.target_faces = 1;
  CHECK(grow_random(gs).face_count() == 1);  // no gluing needed

  gs.target_faces = 5;
  gs.max_attempts = -1;  // every gluing attempt is over budget
  CHECK(fixtures::thrown_code([&] { grow_random(gs); }) ==
        ErrorCode::GrowthStalled);

  GrowthSpec bad;
  bad.target_faces = 3;
  CHECK(fixtures::thrown_code([&] { grow_random(bad); }) ==  // empty palette
        ErrorCode::SpecViolation);
  bad.palette = {4, 7};
  CHECK(fixtures::thrown_code([&] { grow_random(bad); }) ==
        ErrorCode::SpecViolation);
  bad.palette = {4};
  bad.target_faces = 0;
  CHECK(fixtures::thrown_code([&] { grow_random(bad); }) ==
        ErrorCode::SpecViolation);
}
