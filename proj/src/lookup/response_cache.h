// Copyright 2026 The Tabmatch Authors.
//
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

#ifndef TABMATCH_LOOKUP_RESPONSE_CACHE_H_
#define TABMATCH_LOOKUP_RESPONSE_CACHE_H_

#include <optional>
#include <string>
#include <vector>

#include "lookup/service.h"

namespace tabmatch {

// On-disk cache of service responses, one JSON file per
// (service, query, language, limit) key. Writes go through a temporary file
// and an atomic rename, so concurrent readers see either nothing or a whole
// entry.
class ResponseCache {
 public:
  explicit ResponseCache(std::string directory);

  std::optional<std::vector<std::string>> Get(const std::string& service,
                                              const LookupRequest& request) const;
  void Put(const std::string& service, const LookupRequest& request,
           const std::vector<std::string>& entities) const;

  std::string PathFor(const std::string& service, const LookupRequest& request) const;
  const std::string& directory() const { return directory_; }

 private:
  std::string directory_;
};

}  // namespace tabmatch

#endif  // TABMATCH_LOOKUP_RESPONSE_CACHE_H_
