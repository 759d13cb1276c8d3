#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "e2w/errors.hpp"

namespace e2w {

/// Exact scalar for angular quantities, always interpreted as a multiple of
/// pi. Link girths can exceed pi (e.g. 9/4), so raw Rat values are used
/// wherever no cap applies.
using Rat = boost::rational<long long>;

inline double to_radians(const Rat& r) {
  return M_PI * static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

inline std::string pi_string(const Rat& r) {
  std::ostringstream os;
  if (r.numerator() == 0) return "0";
  if (r.numerator() == r.denominator()) return "pi";
  if (r.denominator() == 1) {
    os << r.numerator() << "*pi";
  } else if (r.numerator() == 1) {
    os << "pi/" << r.denominator();
  } else {
    os << r.numerator() << "*pi/" << r.denominator();
  }
  return os.str();
}

/// Alexandrov angle: an exact rational multiple of pi in [0, pi].
/// Addition saturates at pi, matching concatenation of angles at a point
/// (beyond pi the comparison geometry no longer distinguishes values).
class Angle {
 public:
  constexpr Angle() = default;

  explicit Angle(const Rat& multiple_of_pi) : r_(multiple_of_pi) {
    require(r_ >= Rat(0) && r_ <= Rat(1), ErrorCode::Internal,
            "angle outside [0, pi]: " + pi_string(r_));
  }

  static Angle zero() { return Angle(); }
  static Angle pi() { return Angle(Rat(1)); }
  /// num/den * pi
  static Angle of(long long num, long long den) {
    return Angle(Rat(num, den));
  }

  const Rat& ratio() const { return r_; }
  bool is_zero() const { return r_ == Rat(0); }
  bool is_pi() const { return r_ == Rat(1); }
  double radians() const { return to_radians(r_); }
  std::string str() const { return pi_string(r_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.r_ == b.r_; }
  friend bool operator!=(const Angle& a, const Angle& b) { return a.r_ != b.r_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.r_ < b.r_; }
  friend bool operator<=(const Angle& a, const Angle& b) { return a.r_ <= b.r_; }
  friend bool operator>(const Angle& a, const Angle& b) { return a.r_ > b.r_; }
  friend bool operator>=(const Angle& a, const Angle& b) { return a.r_ >= b.r_; }

 private:
  Rat r_{0};
};

/// Capped addition: min(a + b, pi).
inline Angle capped_add(const Angle& a, const Angle& b) {
  Rat s = a.ratio() + b.ratio();
  return Angle(s > Rat(1) ? Rat(1) : s);
}

inline Angle capped(const Rat& r) {
  return Angle(r > Rat(1) ? Rat(1) : (r < Rat(0) ? Rat(0) : r));
}

inline Angle min(const Angle& a, const Angle& b) { return a < b ? a : b; }
inline Angle max(const Angle& a, const Angle& b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, const Angle& a) {
  return os << a.str();
}

/// Half-integer distance (combinatorial distance from a vertex to a wall is
/// always an integer plus one half). Stored as the integer numerator over 2.
struct HalfDist {
  long long halves = 0;

  constexpr HalfDist() = default;
  constexpr explicit HalfDist(long long h) : halves(h) {}
  static constexpr HalfDist whole(long long k) { return HalfDist(2 * k); }
  static constexpr HalfDist and_half(long long k) { return HalfDist(2 * k + 1); }

  double value() const { return static_cast<double>(halves) / 2.0; }

  std::string str() const {
    std::ostringstream os;
    if (halves % 2 == 0) {
      os << halves / 2;
    } else {
      if (halves / 2 != 0 || halves < 0) {
        os << (halves < 0 ? (halves - 1) / 2 : halves / 2) << "+";
      }
      os << "1/2";
    }
    return os.str();
  }

  friend auto operator<=>(const HalfDist&, const HalfDist&) = default;
  friend HalfDist operator+(HalfDist a, HalfDist b) {
    return HalfDist(a.halves + b.halves);
  }
};

inline std::ostream& operator<<(std::ostream& os, const HalfDist& d) {
  return os << d.str();
}

}  // namespace e2w
