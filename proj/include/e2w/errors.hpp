#pragma once

#include <stdexcept>
#include <string>

namespace e2w {

/// Failure categories raised by construction, validation and query routines.
/// Every Error carries one of these so callers (and the CLI) can map a
/// failure to a stable, testable identity instead of parsing message text.
enum class ErrorCode {
  // complex construction
  OddFace,         // face cycle of odd length
  DegenerateFace,  // repeated vertex inside one face cycle
  FaceTooSmall,    // face cycle shorter than 4
  Disconnected,    // 1-skeleton (or vertex id range) not connected
  // link schemes
  SchemeViolation,  // weight scheme not applicable (e.g. uniform large-type
                    // weights on a complex containing squares)
  // walls
  WallNotEmbedded,  // wall graph is not a tree, or a wall meets one face in
                    // two distinct opposite-edge pairs
  BadSeparation,    // removing a wall's dual edges does not leave exactly two
                    // vertex components
  // cell geometry
  InvalidN,            // polygon half-side count n < 2
  MirrorNotInCell,     // mirror index outside the cell
  DirectionInsideCell, // direction argument lies strictly inside the cell
                       // whose corner is being decomposed
  SnapFailed,          // float angle not within tolerance of any admissible
                       // rational multiple of pi
  // criteria
  PreconditionViolated,    // bounding-cell criterion called off-spec
  DirectionsNotComputable, // disjointness test outside supported configurations
  // verification
  NotVerifiedComplex, // parallel-wall verification on an unverified complex
  // generators / io
  SpecViolation,  // generator parameters violate curvature constraints
  GrowthStalled,  // random growth budget exhausted without a legal move
  ParseError,     // malformed input file
  Internal,       // invariant breach inside the library (always a bug)
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::OddFace: return "OddFace";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::FaceTooSmall: return "FaceTooSmall";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SchemeViolation: return "SchemeViolation";
    case ErrorCode::WallNotEmbedded: return "WallNotEmbedded";
    case ErrorCode::BadSeparation: return "BadSeparation";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::MirrorNotInCell: return "MirrorNotInCell";
    case ErrorCode::DirectionInsideCell: return "DirectionInsideCell";
    case ErrorCode::SnapFailed: return "SnapFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DirectionsNotComputable: return "DirectionsNotComputable";
    case ErrorCode::NotVerifiedComplex: return "NotVerifiedComplex";
    case ErrorCode::SpecViolation: return "SpecViolation";
    case ErrorCode::GrowthStalled: return "GrowthStalled";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace e2w
