#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace gaussdeg::cli {

struct RunRecord {
  std::string command;
  std::string spec_hash;
  nlohmann::json result;
  double wall_time_s = 0;
  std::string version;
  std::string timestamp;
};

nlohmann::json record_to_json(const RunRecord& r);

std::string sha256_hex(const std::string& data);

/// Digest of the canonical (key-sorted, compact) spec JSON plus the version.
std::string spec_hash(const nlohmann::json& spec, const std::string& version);

/// Append-only JSON-lines store. The file is held under an exclusive
/// advisory lock for the lifetime of the object.
class ResultCache {
 public:
  ResultCache(const std::filesystem::path& dir, std::string version, std::ostream& warnings);
  ~ResultCache();
  ResultCache(const ResultCache&) = delete;
  ResultCache& operator=(const ResultCache&) = delete;

  /// Latest intact record for this hash written by the same version.
  std::optional<RunRecord> lookup(const std::string& hash) const;
  void store(const RunRecord& r);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::string version_;
  std::ostream& warnings_;
  int fd_ = -1;
};

}  // namespace gaussdeg::cli
