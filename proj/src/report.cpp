#include "decay/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "decay/errors.hpp"

namespace decay {

std::string RunManifest::header_lines() const {
  std::ostringstream out;
  out << "# tool: decay " << kToolVersion << '\n';
  out << "# command: " << command << '\n';
  for (const auto& [label, value] : inputs) {
    out << "# " << label << ": " << value << '\n';
  }
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(params_hash));
  out << "# params_hash: " << hex << '\n';
  if (has_seed) out << "# seed: " << seed << '\n';
  out << "# timestamp: " << timestamp << '\n';
  return out.str();
}

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  const fs::path tmp = dir / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write to " + tmp.string());
    out << content;
    if (!out.flush()) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot move output into place at " + path + ": " + ec.message());
  }
}

}  // namespace decay
