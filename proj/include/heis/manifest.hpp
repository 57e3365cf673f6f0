#ifndef HEIS_MANIFEST_HPP
#define HEIS_MANIFEST_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heis/version.hpp"

namespace heis {

/// FNV-1a over a byte string, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Provenance block embedded in every report: the command, digests of the
/// inputs, and the tool version.  Reports carry no timestamps or timings, so
/// identical inputs and configuration give byte-identical files; wall-clock
/// time goes to stderr instead.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, fnv1a digest)
  std::string version = kVersion;

  void add_input(const std::string& path) { inputs.emplace_back(path, fnv1a_hex(read_file(path))); }
};

}  // namespace heis

#endif
