#include "ramsey/cache.hpp"

#include <fstream>

#include "ramsey/version.hpp"

namespace ramsey {

using nlohmann::ordered_json;

ResultCache::ResultCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  path_ = dir / "cache.jsonl";
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  bool versionOk = false, first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      needRewrite_ = true;
      continue;
    }
    if (first) {
      first = false;
      versionOk = j.value("toolVersion", "") == kToolVersion;
      if (!versionOk) {
        // stale cache: drop everything, rewrite on first store
        needRewrite_ = true;
        entries_.clear();
        return;
      }
      continue;
    }
    if (j.contains("key") && j.contains("value")) entries_[j["key"]] = j["value"];
  }
}

std::optional<ordered_json> ResultCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void ResultCache::rewrite_locked() {
  std::ofstream out(path_, std::ios::trunc);
  out << ordered_json{{"toolVersion", kToolVersion}}.dump() << "\n";
  for (const auto& [k, v] : entries_)
    out << ordered_json{{"key", k}, {"value", v}}.dump() << "\n";
  out.flush();
  needRewrite_ = false;
}

void ResultCache::store(const std::string& key, const ordered_json& value) {
  std::lock_guard<std::mutex> lock(mu_);
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  entries_[key] = value;
  if (needRewrite_ || fresh) {
    rewrite_locked();
    return;
  }
  std::ofstream out(path_, std::ios::app);
  out << ordered_json{{"key", key}, {"value", value}}.dump() << "\n";
  out.flush();
}

}  // namespace ramsey
