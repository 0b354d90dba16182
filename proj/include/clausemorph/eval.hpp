// Copyright 2026 The clausemorph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact-match scoring of model predictions against gold task files.
//
// Prediction files hold one output per line, aligned with the gold file:
// the clause form for inflection and reinflection, "lemma TAB features" for
// analysis (features nested or flattened, in any order).

#ifndef CLAUSEMORPH_EVAL_HPP_
#define CLAUSEMORPH_EVAL_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/featkit.hpp"
#include "clausemorph/sampler.hpp"

namespace clausemorph {

struct Mismatch {
  std::size_t index = 0;  // 0-based example index
  std::string gold;
  std::string predicted;
};

struct RunScore {
  double accuracy = 0;  // percent
  std::size_t correct = 0;
  std::size_t total = 0;
  std::vector<Mismatch> mismatches;  // first `max_mismatches` only
};

// True if `predicted` is a correct output for `gold`. Unparsable analysis
// features count as wrong.
bool prediction_correct(const TaskExample& gold, std::string_view predicted,
                        TaskKind task, const FeatureInventory& inv);

// Throws kLengthMismatch when the counts differ.
RunScore score_run(const std::vector<TaskExample>& gold,
                   const std::vector<std::string>& predictions, TaskKind task,
                   const FeatureInventory& inv, std::size_t max_mismatches = 10);

// Reads a prediction file, one prediction per line.
std::vector<std::string> load_predictions(const std::filesystem::path& path);

struct Aggregate {
  double mean = 0;
  double stddev = 0;  // population standard deviation
};

// Throws kEmptyRunList.
Aggregate aggregate_runs(const std::vector<double>& accuracies);
// "70.0 ±1.2"
std::string format_aggregate(const Aggregate& a);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_EVAL_HPP_
