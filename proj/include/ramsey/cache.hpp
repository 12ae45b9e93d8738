#pragma once
// Persistent result store: one append-friendly JSONL file keyed by a
// canonical parameter string. Records from a different tool version are
// discarded wholesale.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

namespace ramsey {

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<nlohmann::ordered_json> lookup(const std::string& key) const;
  void store(const std::string& key, const nlohmann::ordered_json& value);

  const std::filesystem::path& file() const { return path_; }
  uint64_t hits() const { return hits_; }

 private:
  void rewrite_locked();

  std::filesystem::path path_;
  std::map<std::string, nlohmann::ordered_json> entries_;
  bool needRewrite_ = false;
  mutable std::mutex mu_;
  mutable uint64_t hits_ = 0;
};

}  // namespace ramsey
