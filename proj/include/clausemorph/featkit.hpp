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

// Layered feature bundles.
//
// A bundle holds the clause-wide features (mood, tense, aspect, sentence
// features) plus one argument slot per case, each slot carrying its own
// person/number/gender/misc values:
//
//   IND;FUT;NOM(1,SG);ACC(3,SG,MASC);DAT(3,SG,FEM)
//
// Values are stored as small integer ids into a FeatureInventory, so a
// bundle is only meaningful together with the inventory that produced it.
// Ids are 1-based; 0 means "absent". Since ids follow inventory order, the
// defaulted comparison of two bundles is also their canonical order.

#ifndef CLAUSEMORPH_FEATKIT_HPP_
#define CLAUSEMORPH_FEATKIT_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clausemorph {

using ValueId = std::uint8_t;

enum class Attribute : std::uint8_t {
  kMood,
  kTense,
  kAspect,
  kSentence,
  kCase,
  kPerson,
  kNumber,
  kGender,
  kMisc,
};
inline constexpr std::size_t kAttributeCount = 9;

std::string_view attribute_name(Attribute a);

// True for the attributes that live inside argument slots.
constexpr bool is_argument_attribute(Attribute a) {
  return a == Attribute::kPerson || a == Attribute::kNumber ||
         a == Attribute::kGender || a == Attribute::kMisc;
}

struct FeatureRef {
  Attribute attribute;
  ValueId id;
  bool operator==(const FeatureRef&) const = default;
};

// The closed set of features a bundle may draw from, with the canonical
// case order. Loaded from a small line-oriented file:
//
//   Tense: PST PRS FUT
//   Aspect (combinable): HAB PROG PRF PRSP
//   alias PERF = PRF
//   Case: NOM ACC DAT
//   Case (locative): ABL ALL
//
// Repeated attribute lines append, so case order is the order of appearance.
class FeatureInventory {
 public:
  static FeatureInventory parse(std::string_view text,
                                std::string_view source = "<inventory>");
  static FeatureInventory load(const std::filesystem::path& path);
  // The shipped inventory (data/inventory.txt), compiled in.
  static const FeatureInventory& standard();
  static std::string_view standard_text();

  // Case-insensitive lookup; aliases resolve to their target.
  std::optional<FeatureRef> lookup(std::string_view token) const;
  std::optional<ValueId> find(Attribute a, std::string_view token) const;

  const std::vector<std::string>& values(Attribute a) const {
    return values_[static_cast<std::size_t>(a)];
  }
  // Canonical (uppercase) name of a value; id must be valid.
  const std::string& name(Attribute a, ValueId id) const;
  std::size_t size() const;  // total number of distinct values

  bool aspects_combinable() const { return aspects_combinable_; }
  bool is_locative(ValueId case_id) const;

  bool operator==(const FeatureInventory& other) const;

 private:
  std::array<std::vector<std::string>, kAttributeCount> values_;
  std::unordered_map<std::string, FeatureRef> index_;
  std::vector<bool> locative_;  // indexed by case id - 1
  bool aspects_combinable_ = false;
};

// One case-keyed argument. `misc` is a bitmask over Misc values
// (bit i <-> id i + 1).
struct ArgumentSlot {
  ValueId case_id = 0;
  ValueId person = 0;
  ValueId number = 0;
  ValueId gender = 0;
  std::uint8_t misc = 0;

  bool empty() const {
    return person == 0 && number == 0 && gender == 0 && misc == 0;
  }
  bool has_misc(ValueId id) const { return misc & (1u << (id - 1)); }
  auto operator<=>(const ArgumentSlot&) const = default;
};

inline constexpr std::size_t kMaxArguments = 6;

class FeatureBundle {
 public:
  ValueId mood = 0;
  ValueId tense = 0;
  std::uint16_t aspects = 0;  // bitmask over Aspect values
  std::uint8_t sentence = 0;  // bitmask over Sentence values

  std::span<const ArgumentSlot> args() const { return {args_.data(), count_}; }
  std::size_t arg_count() const { return count_; }
  const ArgumentSlot* find(ValueId case_id) const;

  // Inserts keeping case order. Returns false if the case is already taken.
  bool add_argument(const ArgumentSlot& slot);
  // Replaces the slot for slot.case_id; the case must already be present.
  void replace_argument(const ArgumentSlot& slot);
  void clear_arguments();

  bool has_aspect(ValueId id) const { return aspects & (1u << (id - 1)); }
  bool has_sentence(ValueId id) const { return sentence & (1u << (id - 1)); }

  // Copy of the clause-wide part (no argument slots).
  FeatureBundle tam_part() const;

  std::strong_ordering operator<=>(const FeatureBundle& other) const;
  bool operator==(const FeatureBundle& other) const;

 private:
  std::array<ArgumentSlot, kMaxArguments> args_{};
  std::uint8_t count_ = 0;
};

// Parses `IND;FUT;NOM(1,SG);ACC(3,SG,MASC)` in any order and any letter case.
// Throws Error{kUnknownFeature | kDuplicateAttribute | kMalformedSlot}.
FeatureBundle parse_bundle(std::string_view text, const FeatureInventory& inv);

// Canonical form: mood; tense; aspects; sentence features; slots in case
// order, all uppercase. Slot values come out person, number, gender, misc.
std::string serialize_bundle(const FeatureBundle& b,
                             const FeatureInventory& inv);

// NOM(1,SG) -> NOM1;NOMSG, the representation models are trained on.
std::string flatten_bundle(const FeatureBundle& b, const FeatureInventory& inv);
// Inverse of flatten_bundle. Throws kAmbiguousToken for tokens that are
// neither a clause feature nor a case-prefixed argument value.
FeatureBundle unflatten_bundle(std::string_view text,
                               const FeatureInventory& inv);

// Number of tokens flatten_bundle would produce.
std::size_t flat_feature_count(const FeatureBundle& b);

// Accepts either the nested or the flattened notation.
FeatureBundle parse_any_bundle(std::string_view text,
                               const FeatureInventory& inv);

// Throws if any id is out of range for `inv` or a slot is empty.
void validate_bundle(const FeatureBundle& b, const FeatureInventory& inv);

// Slot written as its value list, e.g. "3,SG,MASC".
std::string serialize_slot_values(const ArgumentSlot& slot,
                                  const FeatureInventory& inv);
// Parses "3,SG,MASC" into a slot for `case_id`.
ArgumentSlot parse_slot_values(std::string_view text, ValueId case_id,
                               const FeatureInventory& inv);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_FEATKIT_HPP_
