// Copyright 2026 The Puiseux Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUISEUX_CACHE_HPP
#define PUISEUX_CACHE_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "puiseux/serialize.hpp"

namespace puiseux {

/// A single JSON object mapping request keys to rendered output. A missing
/// file is an empty cache; an unreadable or corrupt one is reported on
/// \p warnings and then treated as empty.
class ResultCache {
 public:
  ResultCache(std::filesystem::path path, std::ostream& warnings);

  std::optional<std::string> get(const std::string& key) const;
  /// Records the entry and rewrites the file through a temporary + rename.
  void put(const std::string& key, const std::string& value);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ostream& warnings_;
  Json entries_ = Json::object();
};

/// Canonical key text: compact JSON with sorted keys.
std::string cache_key(const Json& request);

}  // namespace puiseux

#endif  // PUISEUX_CACHE_HPP
