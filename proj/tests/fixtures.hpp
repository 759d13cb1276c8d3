#pragma once

// Hand-built complexes shared across the test suite. Everything here is
// small enough to verify by hand; expected values in the tests were derived
// independently of the library (counted on paper or brute-forced).

#include <vector>

#include "e2w/complex.hpp"
#include "e2w/errors.hpp"

namespace fixtures {

/// Runs f and reports the error code it threw (Internal if it didn't throw).
template <class F>
e2w::ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const e2w::Error& e) {
    return e.code();
  }
  return e2w::ErrorCode::Internal;
}

/// rows x cols block of unit squares; vertex (r, c) has id r*(cols+1) + c.
inline e2w::EvenComplex grid(int rows, int cols) {
  std::vector<std::vector<int>> faces;
  auto id = [cols](int r, int c) { return r * (cols + 1) + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
  return e2w::build_complex(faces, "grid");
}

inline int grid_id(int cols, int r, int c) { return r * (cols + 1) + c; }

/// Ring of k squares (inner cycle 0..k-1, outer cycle k..2k-1): an annulus.
/// Not simply connected; Euler characteristic 0.
inline e2w::EvenComplex annulus(int k) {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    faces.push_back({i, j, k + j, k + i});
  }
  return e2w::build_complex(faces, "annulus");
}

/// Two squares sharing the edge {1, 2}.
inline e2w::EvenComplex two_squares() {
  return e2w::build_complex({{0, 1, 2, 3}, {1, 4, 5, 2}}, "two_squares");
}

/// Three squares fanned around vertex 0: total angle 3*pi/2 < 2*pi, so the
/// link condition fails at 0 (positively curved corner).
inline e2w::EvenComplex three_squares_fan() {
  return e2w::build_complex({{0, 1, 2, 3}, {0, 3, 4, 5}, {0, 5, 6, 1}},
                            "three_squares_fan");
}

/// Two squares glued along two consecutive edges {0,1} and {1,2}: the link
/// of vertex 1 has a doubled arc (not simplicial).
inline e2w::EvenComplex pillow_squares() {
  return e2w::build_complex({{0, 1, 2, 3}, {0, 1, 2, 4}}, "pillow_squares");
}

/// Single 2n-gon with vertices 0..2n-1.
inline e2w::EvenComplex polygon(int sides) {
  std::vector<int> cycle(sides);
  for (int i = 0; i < sides; ++i) cycle[i] = i;
  return e2w::build_complex({cycle}, "polygon");
}

/// An octagon and a square sharing one edge: the wall through that edge has
/// a two-face carrier of different shapes.
inline e2w::EvenComplex octagon_square() {
  return e2w::build_complex({{0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 8, 9}},
                            "octagon_square");
}

}  // namespace fixtures
