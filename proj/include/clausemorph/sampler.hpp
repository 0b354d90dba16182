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

// Task datasets (inflection, reinflection, analysis) sampled from clause
// tables, with lexeme-disjoint train/dev/test splits and learning-curve
// subsets.
//
// All randomness comes from one std::mt19937_64 seeded with the configured
// seed, consumed in this order: lexeme shuffle, then cell choice for each
// train lexeme, each dev lexeme, each test lexeme (in shuffled order).

#ifndef CLAUSEMORPH_SAMPLER_HPP_
#define CLAUSEMORPH_SAMPLER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/featkit.hpp"
#include "clausemorph/paradigm.hpp"

namespace clausemorph {

enum class TaskKind { kInflection, kReinflection, kAnalysis };

std::string_view task_name(TaskKind kind);
// Throws kInvalidArgument for anything but inflection/reinflection/analysis.
TaskKind parse_task_kind(std::string_view name);

struct TaskExample {
  std::string lemma;
  FeatureBundle source;  // reinflection only
  std::string source_form;
  FeatureBundle target;
  std::string target_form;

  bool operator==(const TaskExample&) const = default;
};

inline constexpr std::array<std::string_view, 3> kSplitNames{"train", "dev", "test"};

struct DatasetSplit {
  TaskKind task = TaskKind::kInflection;
  std::uint64_t seed = 0;
  // Indexed train, dev, test. Examples are grouped by lexeme, lexemes in
  // shuffled order, cells within a lexeme in the order they were drawn.
  std::array<std::vector<TaskExample>, 3> examples;
  std::array<std::vector<std::string>, 3> lexemes;
};

struct SamplingConfig {
  TaskKind task = TaskKind::kInflection;
  std::size_t total = 10000;
  std::array<double, 3> ratios{0.8, 0.1, 0.1};
  std::array<std::size_t, 3> lexemes{400, 50, 50};
  std::uint64_t seed = 7;
};

// Per-split example counts: round(total * ratio) for train and dev, the
// remainder for test.
std::array<std::size_t, 3> split_counts(std::size_t total,
                                        const std::array<double, 3>& ratios);

// Throws kInvalidArgument (bad ratios), kNotEnoughLexemes,
// kQuotaExceedsTableSize.
DatasetSplit sample_dataset(const std::vector<ClauseInflectionTable>& tables,
                            const SamplingConfig& config);

enum class CurveMode { kBySize, kByLexemes };

// by-size: train truncated to each size, nested, per-lexeme balanced.
// by-lexemes: train restricted to the first k lexemes and topped up from
// their tables to the full train size (identity when k is every lexeme).
// Dev and test are carried over unchanged. Throws kPointExceedsAvailable,
// kInvalidArgument (points not ascending).
std::vector<DatasetSplit> learning_curve_subsets(
    const DatasetSplit& split, CurveMode mode,
    const std::vector<std::size_t>& points,
    const std::vector<ClauseInflectionTable>& tables);

// One TSV row in the task's format. `flat` writes flattened features.
std::string format_example(const TaskExample& e, TaskKind task,
                           const FeatureInventory& inv, bool flat = false);
std::vector<TaskExample> parse_examples(std::string_view content, TaskKind task,
                                        const FeatureInventory& inv,
                                        std::string_view source = "<task>");
std::vector<TaskExample> load_examples(const std::filesystem::path& path,
                                       TaskKind task,
                                       const FeatureInventory& inv);

// Writes train.tsv, dev.tsv, test.tsv and manifest.json into `dir`.
void export_task(const DatasetSplit& split, const std::filesystem::path& dir,
                 const FeatureInventory& inv, bool flat = false);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_SAMPLER_HPP_
