#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "gaussdeg/error.hpp"

namespace gaussdeg::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string spec_hash(const nlohmann::json& spec, const std::string& version) {
  // nlohmann objects keep keys sorted, so dump() is canonical.
  return sha256_hex(spec.dump() + "\n" + version);
}

nlohmann::json record_to_json(const RunRecord& r) {
  return {{"command", r.command},       {"spec_hash", r.spec_hash}, {"result", r.result},
          {"wall_time_s", r.wall_time_s}, {"version", r.version},    {"timestamp", r.timestamp}};
}

ResultCache::ResultCache(const std::filesystem::path& dir, std::string version, std::ostream& warnings)
    : path_(dir / "results.jsonl"), version_(std::move(version)), warnings_(warnings) {
  std::filesystem::create_directories(dir);
  fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error("cannot open cache file " + path_.string());
  if (::flock(fd_, LOCK_EX) != 0) {
    ::close(fd_);
    throw Error("cannot lock cache file " + path_.string());
  }
}

ResultCache::~ResultCache() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

std::optional<RunRecord> ResultCache::lookup(const std::string& hash) const {
  std::ifstream in(path_);
  std::optional<RunRecord> found;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      RunRecord r;
      r.command = j.at("command").get<std::string>();
      r.spec_hash = j.at("spec_hash").get<std::string>();
      r.result = j.at("result");
      r.wall_time_s = j.at("wall_time_s").get<double>();
      r.version = j.at("version").get<std::string>();
      r.timestamp = j.at("timestamp").get<std::string>();
      // The digest covers the result, so a damaged payload never matches.
      if (j.at("result_digest").get<std::string>() != sha256_hex(r.result.dump())) {
        throw Error("result digest mismatch");
      }
      if (r.spec_hash == hash && r.version == version_) found = std::move(r);
    } catch (const std::exception& e) {
      warnings_ << "warning: skipping corrupted cache entry " << path_.string() << ":" << lineno << " ("
                << e.what() << ")\n";
    }
  }
  return found;
}

void ResultCache::store(const RunRecord& r) {
  auto j = record_to_json(r);
  j["result_digest"] = sha256_hex(r.result.dump());
  const std::string line = j.dump() + "\n";
  if (::write(fd_, line.data(), line.size()) != static_cast<ssize_t>(line.size())) {
    throw Error("short write to cache file " + path_.string());
  }
}

}  // namespace gaussdeg::cli
