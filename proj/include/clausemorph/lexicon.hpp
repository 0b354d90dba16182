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

// Word-level input data: UniMorph triplet files, frequency and exclusion
// lists, and the per-verb frame annotations.

#ifndef CLAUSEMORPH_LEXICON_HPP_
#define CLAUSEMORPH_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/featkit.hpp"

namespace clausemorph {

struct WordEntry {
  std::string lemma;
  std::string form;
  std::string features;  // word-level tag, e.g. "V;PST"
};

// One lexeme's word-level paradigm: tag -> form, one form per tag.
struct WordInflectionTable {
  std::string lemma;
  std::map<std::string, std::string, std::less<>> entries;

  const std::string* form(std::string_view tag) const {
    auto it = entries.find(tag);
    return it == entries.end() ? nullptr : &it->second;
  }
  bool operator==(const WordInflectionTable&) const = default;
};

struct UnimorphData {
  std::vector<WordInflectionTable> tables;  // in order of first appearance
  std::size_t duplicate_rows = 0;           // (lemma, tag) repeats dropped

  const WordInflectionTable* find(std::string_view lemma) const;
};

// Reads a UniMorph TSV (lemma TAB form TAB tag). Blank lines are skipped.
// Throws kMalformedRow (with line number) or kEmptyFile.
UnimorphData parse_unimorph(std::string_view content,
                            std::string_view source = "<unimorph>");
UnimorphData load_unimorph(const std::filesystem::path& path);

// A frequency list is one token per line, most frequent first.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

// Every lexeme with a word table, in frequency order, minus exclusions.
// `limit` caps the result (0 = all).
std::vector<std::string> rank_lexemes(
    const std::vector<WordInflectionTable>& tables,
    const std::vector<std::string>& frequency,
    const std::set<std::string, std::less<>>& exclude, std::size_t limit = 0);

// The n best-ranked lemmas present in both tables and frequency, and
// absent from exclude. Deterministic. Throws kInvalidArgument for n == 0
// and kInsufficientLexemes when fewer than n lemmas qualify.
std::vector<std::string> sample_lexemes(
    const std::vector<WordInflectionTable>& tables,
    const std::vector<std::string>& frequency, std::size_t n,
    const std::set<std::string, std::less<>>& exclude);

// A verb frame: the case labels of its obligatory arguments, kept sorted in
// inventory case order.
class Frame {
 public:
  Frame() = default;
  // Throws kInvalidArgument on a repeated case.
  explicit Frame(std::vector<ValueId> cases);

  const std::vector<ValueId>& cases() const { return cases_; }
  bool contains(ValueId case_id) const;
  bool empty() const { return cases_.empty(); }
  auto operator<=>(const Frame&) const = default;

 private:
  std::vector<ValueId> cases_;
};

// "NOM,ACC,ABL"; an argument-free frame is written "-".
Frame parse_frame(std::string_view text, const FeatureInventory& inv);
std::string format_frame(const Frame& frame, const FeatureInventory& inv);
// The case set of a bundle's slots, as a frame.
Frame frame_of(const FeatureBundle& b);

struct FrameAnnotation {
  std::string lemma;
  std::vector<Frame> frames;
  bool operator==(const FrameAnnotation&) const = default;
};

// Frames TSV: lemma TAB frame TAB frame ...
// Throws kUnknownCase, kEmptyFrameList, kDuplicateFrame, kMalformedRow.
std::vector<FrameAnnotation> parse_frames(std::string_view content,
                                          const FeatureInventory& inv,
                                          std::string_view source = "<frames>");
std::vector<FrameAnnotation> load_frames(const std::filesystem::path& path,
                                         const FeatureInventory& inv);
std::string format_frames(const std::vector<FrameAnnotation>& annotations,
                          const FeatureInventory& inv);
// Atomic replace of the file.
void save_frames(const std::filesystem::path& path,
                 const std::vector<FrameAnnotation>& annotations,
                 const FeatureInventory& inv);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_LEXICON_HPP_
