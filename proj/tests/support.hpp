#pragma once

#include "hedrite/enumerate.hpp"
#include "hedrite/golden.hpp"
#include "hedrite/io.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace testing {

// Census graph with the given catalog number; throws if none matches uniquely.
inline const hedrite::PlaneGraph& catalog(int i, int n, const std::string& id) {
  static std::map<std::tuple<int, int, std::string>, hedrite::PlaneGraph> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(i, n, id);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  for (const auto& r : hedrite::enumerate(i, n)) {
    if (auto m = hedrite::match_catalog(r); m && *m == id) {
      return cache.emplace(key, r.graph).first->second;
    }
  }
  throw hedrite::Error("no census graph for " + std::to_string(i) + "-hedrite " + id);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(HEDRITE_FIXTURE_DIR) + "/" + name;
}

inline hedrite::PlaneGraph fixture(const std::string& name) {
  return hedrite::read_file(fixture_path(name)).at(0).graph;
}

inline const std::vector<hedrite::HedriteRecord>& census15() {
  static const std::vector<hedrite::HedriteRecord> all = hedrite::full_census(15);
  return all;
}

}  // namespace testing
