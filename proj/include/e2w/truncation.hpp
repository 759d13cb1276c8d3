#pragma once

#include "e2w/angle.hpp"
#include "e2w/errors.hpp"

namespace e2w {

/// Truncation parameter for a 2n-gon: the corner angle of the truncated
/// metric is (q-1)pi/q. Chosen so that q(n) <= n (never increasing angles)
/// while keeping 1/q as large as the constraint allows:
///   n in {2,3} -> n,   n in {4,5} -> 4,   n >= 6 -> 6.
inline int q_of(int n) {
  require(n >= 2, ErrorCode::InvalidN,
          "polygon half-side count must be >= 2, got " + std::to_string(n));
  if (n <= 3) return n;
  if (n <= 5) return 4;
  return 6;
}

/// Whether a corner triple stays non-positively curved after truncation:
/// sum of 1/q(n_i) at most 1. The point of the table above is that this is
/// implied by sum of 1/n_i at most 1.
inline bool truncation_triple_ok(int n1, int n2, int n3) {
  Rat s = Rat(1, q_of(n1)) + Rat(1, q_of(n2)) + Rat(1, q_of(n3));
  return s <= Rat(1);
}

}  // namespace e2w
