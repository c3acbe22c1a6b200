#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace meyerlab {

inline constexpr const char* kToolVersion = "meyerlab 0.1.0";

// Provenance block embedded in every output file. Re-running the same command
// with the same seed reproduces outputs byte-for-byte; the timestamp honors
// SOURCE_DATE_EPOCH so reruns can pin it.
struct RunManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> input_hashes;  // (path, fnv1a64 hex)
  std::vector<std::string> output_paths;
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

nlohmann::json to_json(const RunManifest& m);

// FNV-1a 64-bit over the file bytes, hex encoded. Throws on I/O failure.
std::string hash_file(const std::string& path);

// ISO-8601 UTC; SOURCE_DATE_EPOCH overrides the wall clock when set.
std::string manifest_timestamp();

}  // namespace meyerlab
