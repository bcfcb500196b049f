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

#ifndef TABMATCH_HARNESS_EVALUATE_H_
#define TABMATCH_HARNESS_EVALUATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "harness/targets.h"

namespace tabmatch {

class KnowledgeGraph;

enum class Task { kCea, kCta, kCpa };

std::string_view TaskName(Task task);
// Throws UsageError for anything but cea, cta or cpa.
Task ParseTask(std::string_view name);

struct EvalReport {
  Task task = Task::kCea;
  // CEA / CPA.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t correct = 0;
  size_t submitted = 0;  // answers addressing a gold target
  size_t targets = 0;
  // CTA.
  double ah = 0.0;
  size_t perfect = 0;
  size_t okay = 0;
  size_t wrong = 0;
  size_t missing = 0;  // gold targets with no answer
  size_t ignored = 0;  // answers for non-target coordinates
  std::vector<std::string> warnings;

  std::string ToJson() const;
};

// Harmonic mean; 0 when both are 0.
double F1Score(double precision, double recall);

// Exact match on the answer id, after redirect canonicalization when `kg`
// is given.
EvalReport EvaluateCea(const std::vector<CeaAnswer>& gold, const std::vector<CeaAnswer>& pred,
                       const KnowledgeGraph* kg);
EvalReport EvaluateCpa(const std::vector<CpaAnswer>& gold, const std::vector<CpaAnswer>& pred,
                       const KnowledgeGraph* kg);
// AH = (perfect + 0.5 okay - wrong) / |gold columns|. The first gold class
// is the exact type; each distinct submitted class counts once: perfect when
// it is the exact type, okay when it is a strict ancestor of it, else wrong.
EvalReport EvaluateCta(const std::vector<CtaAnswer>& gold, const std::vector<CtaAnswer>& pred,
                       const KnowledgeGraph& kg);

// Reads both files and dispatches on `task`.
EvalReport EvaluateFiles(Task task, const std::string& gold_path, const std::string& pred_path,
                         const KnowledgeGraph& kg);

}  // namespace tabmatch

#endif  // TABMATCH_HARNESS_EVALUATE_H_
