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

#include "puiseux/cache.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace puiseux {

ResultCache::ResultCache(std::filesystem::path path, std::ostream& warnings)
    : path_(std::move(path)), warnings_(warnings) {
  std::ifstream in(path_);
  if (!in) return;
  std::stringstream text;
  text << in.rdbuf();
  Json loaded = Json::parse(text.str(), nullptr, false);
  if (loaded.is_discarded() || !loaded.is_object()) {
    warnings_ << "warning: ignoring corrupt cache " << path_.string() << "\n";
    return;
  }
  for (auto it = loaded.begin(); it != loaded.end(); ++it) {
    if (it.value().is_string()) entries_[it.key()] = it.value();
  }
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->get<std::string>();
}

void ResultCache::put(const std::string& key, const std::string& value) {
  entries_[key] = value;
  std::filesystem::path temp = path_;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) {
      warnings_ << "warning: cannot write cache " << temp.string() << "\n";
      return;
    }
    out << entries_.dump() << "\n";
    if (!out) {
      warnings_ << "warning: short write to cache " << temp.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path_, ec);
  if (ec) {
    warnings_ << "warning: cannot replace cache " << path_.string() << ": " << ec.message() << "\n";
    std::filesystem::remove(temp, ec);
  }
}

std::string cache_key(const Json& request) { return request.dump(); }

}  // namespace puiseux
