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

// Clause-level inflection tables: enumeration of every legal bundle for a
// verb's frames, realization through a grammar, and the lemma/form/features
// TSV they are exchanged in.

#ifndef CLAUSEMORPH_PARADIGM_HPP_
#define CLAUSEMORPH_PARADIGM_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/featkit.hpp"
#include "clausemorph/grammar.hpp"
#include "clausemorph/lexicon.hpp"

namespace clausemorph {

// Every bundle the grammar generates for `frame`, in canonical order:
// TAM cells x subjects x the enumerable pronouns of each other case, with
// objects coreferent with the subject replaced by their reflexive variant.
std::vector<FeatureBundle> enumerate_bundles(const GrammarSpec& g,
                                             const Frame& frame);

// One lexeme's clause paradigm. Cells are kept sorted by bundle; forms live
// in a single buffer since English tables reach 10^5 cells per frame.
class ClauseInflectionTable {
 public:
  ClauseInflectionTable() = default;
  ClauseInflectionTable(std::string lemma, std::vector<Frame> frames);

  const std::string& lemma() const { return lemma_; }
  const std::vector<Frame>& frames() const { return frames_; }
  std::size_t size() const { return bundles_.size(); }
  bool empty() const { return bundles_.empty(); }

  const FeatureBundle& bundle(std::size_t i) const { return bundles_[i]; }
  std::string_view form(std::size_t i) const {
    return std::string_view(arena_).substr(offsets_[i],
                                           offsets_[i + 1] - offsets_[i]);
  }
  std::optional<std::string_view> find(const FeatureBundle& b) const;

  // Appends a cell. Bundles must arrive in strictly increasing canonical
  // order; anything else (including a repeated bundle) throws
  // kInvalidArgument, so a table can never hold two forms for one cell.
  void append(const FeatureBundle& b, std::string_view form);
  void reserve(std::size_t cells, std::size_t chars);

  bool operator==(const ClauseInflectionTable& other) const;

 private:
  std::string lemma_;
  std::vector<Frame> frames_;
  std::vector<FeatureBundle> bundles_;
  std::vector<std::uint32_t> offsets_{0};
  std::string arena_;
};

// Builds the full table. Throws kMissingWordForm up front if the word table
// lacks a tag the grammar needs; any other realization error is rethrown
// with the lemma and bundle in its message.
ClauseInflectionTable build_table(const GrammarSpec& g,
                                  const WordInflectionTable& word_table,
                                  const FrameAnnotation& annotation);

struct SkippedLexeme {
  std::string lemma;
  std::string reason;
};

struct BuildResult {
  std::vector<ClauseInflectionTable> tables;  // input order
  std::vector<SkippedLexeme> skipped;
  std::size_t cells = 0;
  double seconds = 0;
};

struct BuildOptions {
  std::size_t max_tables = 0;  // 0 = no limit
  unsigned threads = 0;        // 0 = hardware concurrency
  // Called with each finished table in input order instead of collecting
  // it into BuildResult::tables (keeps memory flat for large exports).
  std::function<void(ClauseInflectionTable&&)> sink;
};

// Builds tables for `lemmas` in order. A lexeme without a word table, frame
// annotation, or with any unrealizable cell is skipped as a whole.
BuildResult build_tables(const GrammarSpec& g, const UnimorphData& words,
                         const std::vector<FrameAnnotation>& frames,
                         const std::vector<std::string>& lemmas,
                         const BuildOptions& options = {});

// lemma TAB form TAB features, grouped by lemma, canonical order.
void write_table(std::ostream& out, const ClauseInflectionTable& table,
                 const FeatureInventory& inv);
void export_tables(const std::filesystem::path& path,
                   const std::vector<ClauseInflectionTable>& tables,
                   const FeatureInventory& inv);
// Frames are recovered from the case sets of each lemma's bundles.
std::vector<ClauseInflectionTable> parse_tables(std::string_view content,
                                                const FeatureInventory& inv,
                                                std::string_view source = "<tables>");
std::vector<ClauseInflectionTable> import_tables(const std::filesystem::path& path,
                                                 const FeatureInventory& inv);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_PARADIGM_HPP_
