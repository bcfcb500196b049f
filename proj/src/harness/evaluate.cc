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

#include "harness/evaluate.h"

#include <map>

#include <json.hpp>

#include "kg/knowledge_graph.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

std::string Canonical(const std::string& iri, const KnowledgeGraph* kg) {
  return kg ? kg->Canonicalize(iri) : iri;
}

template <typename Answer, typename Key, typename Value>
EvalReport PrecisionRecall(Task task, const std::vector<Answer>& gold,
                           const std::vector<Answer>& pred, Value Answer::*field,
                           Key Answer::*key_field, const KnowledgeGraph* kg) {
  EvalReport r;
  r.task = task;
  std::map<Key, std::string> truth;
  for (const Answer& g : gold) truth.emplace(g.*key_field, Canonical(g.*field, kg));
  r.targets = truth.size();
  std::map<Key, bool> answered;
  for (const Answer& p : pred) {
    auto it = truth.find(p.*key_field);
    if (it == truth.end()) {
      ++r.ignored;
      continue;
    }
    if (!answered.emplace(p.*key_field, true).second) continue;
    ++r.submitted;
    if (Canonical(p.*field, kg) == it->second) ++r.correct;
  }
  r.missing = r.targets - r.submitted;
  r.precision = r.submitted ? static_cast<double>(r.correct) / r.submitted : 0.0;
  r.recall = r.targets ? static_cast<double>(r.correct) / r.targets : 0.0;
  r.f1 = F1Score(r.precision, r.recall);
  if (r.ignored) {
    r.warnings.push_back(std::to_string(r.ignored) + " answers address no gold target");
  }
  return r;
}

}  // namespace

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kCea: return "cea";
    case Task::kCta: return "cta";
    case Task::kCpa: return "cpa";
  }
  return "cea";
}

Task ParseTask(std::string_view name) {
  if (name == "cea" || name == "CEA") return Task::kCea;
  if (name == "cta" || name == "CTA") return Task::kCta;
  if (name == "cpa" || name == "CPA") return Task::kCpa;
  throw UsageError("unknown task '" + std::string(name) + "' (expected cea, cta or cpa)");
}

double F1Score(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport EvaluateCea(const std::vector<CeaAnswer>& gold, const std::vector<CeaAnswer>& pred,
                       const KnowledgeGraph* kg) {
  return PrecisionRecall(Task::kCea, gold, pred, &CeaAnswer::entity, &CeaAnswer::target, kg);
}

EvalReport EvaluateCpa(const std::vector<CpaAnswer>& gold, const std::vector<CpaAnswer>& pred,
                       const KnowledgeGraph* kg) {
  return PrecisionRecall(Task::kCpa, gold, pred, &CpaAnswer::relation, &CpaAnswer::target, kg);
}

EvalReport EvaluateCta(const std::vector<CtaAnswer>& gold, const std::vector<CtaAnswer>& pred,
                       const KnowledgeGraph& kg) {
  EvalReport r;
  r.task = Task::kCta;
  std::map<CtaTarget, std::string> exact;
  for (const CtaAnswer& g : gold) exact.emplace(g.target, g.classes.front());
  r.targets = exact.size();
  std::map<CtaTarget, bool> answered;
  for (const CtaAnswer& p : pred) {
    auto it = exact.find(p.target);
    if (it == exact.end()) {
      ++r.ignored;
      continue;
    }
    if (!answered.emplace(p.target, true).second) continue;
    ++r.submitted;
    for (const std::string& cls : p.classes) {
      if (cls == it->second) {
        ++r.perfect;
      } else if (kg.IsStrictAncestor(cls, it->second)) {
        ++r.okay;
      } else {
        ++r.wrong;
      }
    }
  }
  r.missing = r.targets - r.submitted;
  if (r.targets) {
    r.ah = (static_cast<double>(r.perfect) + 0.5 * static_cast<double>(r.okay) -
            static_cast<double>(r.wrong)) /
           static_cast<double>(r.targets);
  }
  if (r.ignored) {
    r.warnings.push_back(std::to_string(r.ignored) + " answers address no gold target");
  }
  return r;
}

EvalReport EvaluateFiles(Task task, const std::string& gold_path, const std::string& pred_path,
                         const KnowledgeGraph& kg) {
  std::vector<std::string> warnings;
  const std::string gold = ReadFile(gold_path);
  const std::string pred = ReadFile(pred_path);
  EvalReport r;
  switch (task) {
    case Task::kCea:
      r = EvaluateCea(ParseCeaAnswers(gold, gold_path, &warnings),
                      ParseCeaAnswers(pred, pred_path, &warnings), &kg);
      break;
    case Task::kCta:
      r = EvaluateCta(ParseCtaAnswers(gold, gold_path, &warnings),
                      ParseCtaAnswers(pred, pred_path, &warnings), kg);
      break;
    case Task::kCpa:
      r = EvaluateCpa(ParseCpaAnswers(gold, gold_path, &warnings),
                      ParseCpaAnswers(pred, pred_path, &warnings), &kg);
      break;
  }
  r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
  return r;
}

std::string EvalReport::ToJson() const {
  nlohmann::json j;
  j["task"] = TaskName(task);
  if (task == Task::kCta) {
    j["ah"] = ah;
    j["perfect"] = perfect;
    j["okay"] = okay;
    j["wrong"] = wrong;
  } else {
    j["precision"] = precision;
    j["recall"] = recall;
    j["f1"] = f1;
    j["correct"] = correct;
  }
  j["submitted"] = submitted;
  j["targets"] = targets;
  j["missing"] = missing;
  j["ignored"] = ignored;
  j["warnings"] = warnings;
  return j.dump();
}

}  // namespace tabmatch
