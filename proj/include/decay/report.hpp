#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace decay {

inline constexpr const char* kToolVersion = "1.0.0";

/// Provenance block written at the head of every output file.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (label, path-or-tag)
  std::uint64_t params_hash = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string timestamp;  // UTC, filled by now_utc()

  /// '#'-prefixed comment lines.
  std::string header_lines() const;
};

std::string now_utc();

/// FNV-1a over a byte string; used to fingerprint parameter files.
std::uint64_t fnv1a(const std::string& bytes);

/// Writes content to path atomically (temp file in the same directory,
/// then rename). Throws IoError naming the path.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace decay
