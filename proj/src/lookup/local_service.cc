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

#include "kg/knowledge_graph.h"
#include "lookup/service.h"

namespace tabmatch {

LocalLookupService::LocalLookupService(const KnowledgeGraph& kg, std::string id)
    : kg_(kg), id_(std::move(id)) {}

ServiceRanking LocalLookupService::Lookup(const LookupRequest& request) const {
  return ServiceRanking{id_, request.query, kg_.SearchLabel(request.query, request.limit)};
}

}  // namespace tabmatch
