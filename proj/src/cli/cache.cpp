#include "cycpres/cli/cache.hpp"

#include <cstdlib>

#include "json.hpp"

namespace cycpres::cli {

using Json = nlohmann::ordered_json;

std::string ResultCache::default_path() {
  if (const char* env = std::getenv("CYCPRES_CACHE"); env != nullptr && *env != '\0') return env;
  return "cycpres-cache.jsonl";
}

ResultCache::ResultCache(std::string path, std::ostream& warnings) : path_(std::move(path)) {
  {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (in && std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const Json j = Json::parse(line);
        CacheEntry e;
        e.det = Integer(j.at("det").get<std::string>(), 10);
        const auto& f = j.at("invariant_factors");
        if (!f.is_null()) {
          std::vector<Integer> v;
          for (const auto& x : f) v.emplace_back(x.get<std::string>(), 10);
          e.invariant_factors = std::move(v);
        }
        entries_[j.at("key").get<std::string>()] = std::move(e);
      } catch (const std::exception&) {
        ++skipped_;
        warnings << "warning: cache " << path_ << ':' << lineno << ": skipping corrupt line\n";
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw IoError("cannot open cache file for writing: " + path_);
}

const CacheEntry* ResultCache::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void ResultCache::append(const std::string& key, const CacheEntry& entry) {
  Json j;
  j["key"] = key;
  j["det"] = to_decimal(entry.det);
  if (entry.invariant_factors) {
    Json a = Json::array();
    for (const auto& x : *entry.invariant_factors) a.push_back(to_decimal(x));
    j["invariant_factors"] = std::move(a);
  } else {
    j["invariant_factors"] = nullptr;
  }
  std::lock_guard lock(write_mutex_);
  out_ << j.dump() << '\n';
  out_.flush();
  if (!out_) throw IoError("cannot write cache file: " + path_);
  entries_[key] = entry;
}

} // namespace cycpres::cli
