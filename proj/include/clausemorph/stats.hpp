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

// Cross-lingual paradigm statistics: intransitive table size, number of
// distinct features, mean features per form (flattened count) and mean form
// length in characters.

#ifndef CLAUSEMORPH_STATS_HPP_
#define CLAUSEMORPH_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/featkit.hpp"
#include "clausemorph/paradigm.hpp"

namespace clausemorph {

struct ParadigmStats {
  // Cells of a {NOM}-only table; absent when no table has that frame. If
  // intransitive tables differ in size the most common size is reported.
  std::optional<std::size_t> table_size;
  std::size_t feat_set_size = 0;
  double feats_per_form = 0;
  double form_length = 0;  // Unicode code points, spaces included
  std::size_t tables = 0;
  std::size_t cells = 0;
};

// Streaming form of compute_stats, for table sets too large to hold.
class StatsAccumulator {
 public:
  explicit StatsAccumulator(const FeatureInventory& inv);

  void add_table(const ClauseInflectionTable& table);
  // Cell-by-cell feeding: add_cell for each cell of a table, then
  // end_table with the number of its {NOM}-only cells.
  void add_cell(const FeatureBundle& b, std::string_view form);
  void end_table(std::size_t intransitive_cells);
  bool is_intransitive(const FeatureBundle& b) const;
  // Throws kEmptyInput if nothing was added.
  ParadigmStats result() const;

 private:
  std::optional<ValueId> nom_;
  std::uint32_t mood_ = 0, tense_ = 0, aspect_ = 0, sentence_ = 0;
  std::uint64_t case_ = 0;
  std::uint32_t person_ = 0, number_ = 0, gender_ = 0, misc_ = 0;
  std::size_t tables_ = 0, cells_ = 0;
  std::uint64_t features_ = 0, chars_ = 0;
  std::map<std::size_t, std::size_t> intransitive_sizes_;
};

ParadigmStats compute_stats(const std::vector<ClauseInflectionTable>& tables,
                            const FeatureInventory& inv);

// Streams a lemma/form/features TSV (rows grouped by lemma) without
// holding the tables in memory.
ParadigmStats stats_from_tsv(const std::filesystem::path& path,
                             const FeatureInventory& inv);

std::size_t utf8_length(std::string_view s);

// Rows of (label, stats) as an aligned comparison table.
std::string format_stats_table(
    const std::vector<std::pair<std::string, ParadigmStats>>& rows);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_STATS_HPP_
