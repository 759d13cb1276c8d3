#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "e2w/complex.hpp"
#include "e2w/errors.hpp"

namespace e2w {

/// Canonical form of a face cycle: the lexicographically least vector over
/// all rotations of the cycle and of its reversal.
inline std::vector<int> normalize_cycle(std::vector<int> cycle) {
  std::vector<int> best = cycle;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      if (cycle < best) best = cycle;
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

/// Serialized complex: {"faces": [[...], ...]} with an optional "name".
/// Cycles are normalized and the face list sorted, so equal complexes
/// serialize to identical bytes.
inline std::string to_json_string(const EvenComplex& X) {
  std::vector<std::vector<int>> faces;
  faces.reserve(X.face_count());
  for (const auto& f : X.faces) faces.push_back(normalize_cycle(f));
  std::sort(faces.begin(), faces.end());
  nlohmann::json j;
  j["faces"] = faces;
  if (!X.name.empty()) j["name"] = X.name;
  return j.dump() + "\n";
}

inline EvenComplex from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("faces") && j["faces"].is_array(),
          ErrorCode::ParseError, "expected an object with a \"faces\" array");
  std::vector<std::vector<int>> faces;
  int index = 0;
  for (const auto& f : j["faces"]) {
    require(f.is_array(), ErrorCode::ParseError,
            "face " + std::to_string(index) + " is not an array");
    std::vector<int> cycle;
    for (const auto& v : f) {
      require(v.is_number_integer(), ErrorCode::ParseError,
              "face " + std::to_string(index) + " has a non-integer vertex");
      cycle.push_back(v.get<int>());
    }
    faces.push_back(std::move(cycle));
    ++index;
  }
  std::string name;
  if (j.contains("name")) {
    require(j["name"].is_string(), ErrorCode::ParseError,
            "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return build_complex(faces, std::move(name));
}

inline void save_complex(const EvenComplex& X, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::ParseError, "cannot open for writing: " + path);
  out << to_json_string(X);
  require(out.good(), ErrorCode::ParseError, "write failed: " + path);
}

inline EvenComplex load_complex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::ParseError, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_string(buf.str());
}

/// FNV-1a 64-bit digest of the canonical serialization (name excluded), as
/// 16 hex digits. Stable across platforms; used to pin generator outputs.
inline std::string digest(const EvenComplex& X) {
  EvenComplex anon = X;
  anon.name.clear();
  std::string bytes = to_json_string(anon);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace e2w
