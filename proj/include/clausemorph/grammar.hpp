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

// Declarative per-language clause grammars and the realizer that turns
// (lexeme, frame, bundle) into a clause.
//
// A grammar lists TAM cells, each with a template such as
//
//   IND;FUT;PRF : SUBJ AUX(will, V;FIN) AUX(have, V;NFIN) MAIN(V;V.PTCP;PST) ARGS
//
// plus pronoun tables per case, auxiliary word tables, agreement maps and
// the subject/reflexive policies. The file format is documented in
// docs/grammar-format.md.

#ifndef CLAUSEMORPH_GRAMMAR_HPP_
#define CLAUSEMORPH_GRAMMAR_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clausemorph/featkit.hpp"
#include "clausemorph/lexicon.hpp"

namespace clausemorph {

enum class SubjectPolicy { kOvert, kProDrop, kPartial };
enum class ReflexivePolicy { kNone, kCoreferent };
enum class MarkerKind { kFused, kPrefix, kSuffix };

// Matches a subject slot when every value it names is present in the slot.
// The wildcard matches anything, including a missing subject.
struct SubjectPattern {
  bool wildcard = false;
  ArgumentSlot values;

  bool matches(const ArgumentSlot* subject) const;
};

struct AgreementRule {
  SubjectPattern pattern;
  std::string value;
};

// Named subject -> tag (or tag fragment) table; first matching rule wins.
struct AgreementMap {
  std::string name;
  std::vector<AgreementRule> rules;

  const std::string* resolve(const ArgumentSlot* subject) const;
};

// A word-level tag request such as "V;IND;FUT;{PN}", where {PN} is filled in
// from an agreement map.
struct TagSelector {
  struct Piece {
    std::string text;
    int map = -1;  // index into GrammarSpec::agreement, or -1 for literal text
  };
  std::vector<Piece> pieces;
};

enum class SlotKind { kLiteral, kMainVerb, kAux, kSubject, kNegation, kArguments };

struct TemplateSlot {
  SlotKind kind = SlotKind::kLiteral;
  std::vector<std::string> tokens;  // kLiteral
  std::string aux;                  // kAux: lemma, or "@choice"
  TagSelector tag;                  // kMainVerb, kAux
};

struct TamCell {
  FeatureBundle features;  // clause-wide features only
  // Template has a NEG slot and the features do not fix polarity: the cell
  // then covers both the affirmative and the negated bundle.
  bool expands_negation = false;
  std::vector<TemplateSlot> slots;
  std::vector<ArgumentSlot> subjects;  // restriction; empty = every subject
  std::vector<ValueId> order;          // argument order override
  int line = 0;

  bool admits_subject(const ArgumentSlot* subject) const;
};

struct PronounEntry {
  ArgumentSlot values;  // case_id set to the table's case
  std::vector<std::string> tokens;
  std::string surface;  // tokens with the case marker applied, space-joined
};

struct CaseRealization {
  ValueId case_id = 0;
  MarkerKind marker = MarkerKind::kFused;
  std::vector<std::string> marker_tokens;
  std::vector<PronounEntry> entries;  // declaration order
  std::vector<ArgumentSlot> enumerable;  // non-reflexive entries
  std::unordered_map<std::uint32_t, std::size_t> index;

  const PronounEntry* find(const ArgumentSlot& slot) const;
};

// Clause-wide features and subject values that must all be present for a
// partial pro-drop to fire.
struct DropCondition {
  FeatureBundle tam;
  ArgumentSlot subject;
};

// Per-lexeme auxiliary choice, e.g. German perfect haben/sein.
struct AuxChoice {
  std::string name;
  std::string fallback;
  std::map<std::string, std::string, std::less<>> by_lemma;

  const std::string& lemma_for(std::string_view lexeme) const;
};

struct GrammarLoadOptions {
  // Overrides for `flag` declarations in the grammar file.
  std::map<std::string, bool> flags;
};

struct GrammarSpec {
  std::string language;
  std::string probe;  // lexeme used by validate-grammar
  std::string source;
  FeatureInventory inventory;

  SubjectPolicy subject_policy = SubjectPolicy::kOvert;
  std::vector<DropCondition> drop_conditions;
  ValueId agreement_case = 0;
  bool require_subject = true;
  ReflexivePolicy reflexive = ReflexivePolicy::kNone;
  std::vector<std::string> negation_tokens;
  std::vector<ValueId> argument_order;
  std::map<std::string, bool> flags;

  std::set<std::string, std::less<>> word_tags;  // tags MAIN may request
  std::vector<AgreementMap> agreement;
  std::map<std::string, WordInflectionTable, std::less<>> aux_tables;
  std::vector<AuxChoice> aux_choices;
  std::vector<std::optional<CaseRealization>> cases;  // indexed by case id
  std::vector<TamCell> cells;

  ValueId neg_id = 0;   // Sentence value ids, 0 if the inventory lacks them
  ValueId rflx_id = 0;  // Misc value id of RFLX

  // Cell covering the clause-wide part of `b`, or nullptr.
  const TamCell* match_cell(const FeatureBundle& b) const;
  const CaseRealization* case_table(ValueId case_id) const;
  // Every clause-wide bundle the cells cover (negation expanded), sorted.
  std::vector<std::pair<FeatureBundle, const TamCell*>> tam_bundles() const;
  // Subjects the grammar generates.
  std::span<const ArgumentSlot> subjects() const;
  // True if `object` refers to the same participant as `subject`.
  bool coreferent(const ArgumentSlot& subject, const ArgumentSlot& object) const;
  // The reflexive variant of `subject` in case `case_id`.
  ArgumentSlot reflexive_variant(const ArgumentSlot& subject,
                                 ValueId case_id) const;
  bool drops_subject(const FeatureBundle& b) const;

  std::unordered_map<std::uint64_t, std::size_t> cell_index;
};

std::uint64_t tam_key(const FeatureBundle& b);
std::uint32_t slot_key(const ArgumentSlot& s);

// Parses and fully validates a grammar. Throws kGrammarSyntax, kUnknownTag,
// kMissingAuxTable, kDuplicateTamCell, kIncompletePronounTable; every error
// is located by file and line.
GrammarSpec parse_grammar(std::string_view content, const FeatureInventory& inv,
                          std::string_view source = "<grammar>",
                          const GrammarLoadOptions& options = {});
GrammarSpec load_grammar(const std::filesystem::path& path,
                         const FeatureInventory& inv,
                         const GrammarLoadOptions& options = {});

// Checks that `table` supplies every MAIN tag the grammar can request.
// Returns the missing tags (empty when the lexeme is fully covered).
std::vector<std::string> missing_word_tags(const GrammarSpec& g,
                                           const WordInflectionTable& table);

// One element of a partially realized clause.
struct ClauseToken {
  enum class Kind { kWord, kSubject, kArguments };
  Kind kind = Kind::kWord;
  std::string text;

  static ClauseToken word(std::string w) { return {Kind::kWord, std::move(w)}; }
  bool operator==(const ClauseToken&) const = default;
};

// Periphrastic construction: verb and auxiliaries resolved, subject and
// arguments left as placeholders. Throws kNoMatchingCell, kMissingWordForm.
std::vector<ClauseToken> realize_tam(const GrammarSpec& g,
                                     const WordInflectionTable& word_table,
                                     const FeatureBundle& b);

// Pronoun (with its case marker) for one argument. Throws
// kUnrealizablePronoun.
std::string realize_pronoun(const GrammarSpec& g, ValueId case_id,
                            const ArgumentSlot& slot);

struct Realization {
  std::string form;
  std::size_t pronoun_groups = 0;  // realized argument pronouns, subject included
};

// The full clause for one cell. Throws kFrameMismatch when the bundle's
// cases differ from the frame, plus the realize_tam/realize_pronoun errors.
Realization realize_clause_detailed(const GrammarSpec& g,
                                    const WordInflectionTable& word_table,
                                    const Frame& frame, const FeatureBundle& b);
std::string realize_clause(const GrammarSpec& g,
                           const WordInflectionTable& word_table,
                           const Frame& frame, const FeatureBundle& b);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_GRAMMAR_HPP_
