#pragma once

#include <cstddef>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cycpres/integer.hpp"

namespace cycpres::cli {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CacheEntry {
  Integer det;
  std::optional<std::vector<Integer>> invariant_factors;
};

/// Append-only JSON-lines store of determinants keyed by "r,n,k,s,q".
/// Later lines win on load; unreadable lines are skipped with a warning.
class ResultCache {
public:
  /// CYCPRES_CACHE if set, else "cycpres-cache.jsonl".
  static std::string default_path();

  /// Loads the file if present and opens it for appending; throws IoError
  /// when it cannot be opened for writing.
  ResultCache(std::string path, std::ostream& warnings);

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t skipped_lines() const noexcept { return skipped_; }

  /// Not synchronized against append(); the sweep reads only between batches.
  const CacheEntry* find(const std::string& key) const;

  void append(const std::string& key, const CacheEntry& entry);

private:
  std::string path_;
  std::unordered_map<std::string, CacheEntry> entries_;
  std::size_t skipped_ = 0;
  std::ofstream out_;
  std::mutex write_mutex_;
};

} // namespace cycpres::cli
