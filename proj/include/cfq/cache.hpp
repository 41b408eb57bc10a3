// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef CFQ_CACHE_H_
#define CFQ_CACHE_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "cfq/errors.hpp"
#include "cfq/version.hpp"

namespace cfq {

namespace internal {

inline uint64_t Fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::filesystem::path CachePath(const std::string& dir,
                                       const std::string& key) {
  std::ostringstream name;
  name << std::hex << Fnv1a64(key);
  return std::filesystem::path(dir) / (name.str() + ".cache");
}

}  // namespace internal

// Cached report lookup. The file starts with one header line naming the
// cache format version and the full key; a version mismatch is an error,
// never a silent rebuild, so stale results cannot leak into reports.
inline std::optional<std::string> CacheLoad(const std::string& dir,
                                            const std::string& key) {
  const std::filesystem::path path = internal::CachePath(dir, key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header))
    Fail(errc::cache_version_mismatch, "cache file has no header");
  const std::string prefix = "cfq-cache-v";
  if (header.rfind(prefix, 0) != 0)
    Fail(errc::cache_version_mismatch, "unrecognized cache header");
  const size_t space = header.find(' ');
  if (space == std::string::npos)
    Fail(errc::cache_version_mismatch, "unrecognized cache header");
  const std::string version = header.substr(prefix.size(),
                                            space - prefix.size());
  if (version != std::to_string(kCacheFormatVersion))
    Fail(errc::cache_version_mismatch,
         "cache written by format version " + version);
  if (header.substr(space + 1) != key) return std::nullopt;  // hash collision
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

inline void CacheStore(const std::string& dir, const std::string& key,
                       const std::string& payload) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = internal::CachePath(dir, key);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << "cfq-cache-v" << kCacheFormatVersion << ' ' << key << '\n';
    out << payload;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cfq

#endif  // CFQ_CACHE_H_
