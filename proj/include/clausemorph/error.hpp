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

#ifndef CLAUSEMORPH_ERROR_HPP_
#define CLAUSEMORPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace clausemorph {

// Every failure the library reports carries one of these codes, so callers
// (tests, the CLI, the HTTP service) can branch on the kind of failure
// without parsing messages.
enum class ErrorCode {
  kInvalidArgument,
  kIo,
  // featkit
  kUnknownFeature,
  kDuplicateAttribute,
  kMalformedSlot,
  kAmbiguousToken,
  kInventoryFormat,
  // lexicon_io
  kMalformedRow,
  kEmptyFile,
  kInsufficientLexemes,
  kUnknownCase,
  kEmptyFrameList,
  kDuplicateFrame,
  // grammar
  kGrammarSyntax,
  kUnknownTag,
  kMissingAuxTable,
  kDuplicateTamCell,
  kIncompletePronounTable,
  kNoMatchingCell,
  kMissingWordForm,
  kUnrealizablePronoun,
  kFrameMismatch,
  // sampler
  kQuotaExceedsTableSize,
  kNotEnoughLexemes,
  kPointExceedsAvailable,
  // evaluation
  kLengthMismatch,
  kUnparsableFeatures,
  kEmptyRunList,
  kEmptyInput,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  // Located error: `source` is usually a file path, `line` is 1-based
  // (0 when the error is about the file as a whole).
  Error(ErrorCode code, const std::string& message, std::string source,
        int line = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }
  // The message without code name and location.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string source_;
  int line_ = 0;
};

}  // namespace clausemorph

#endif  // CLAUSEMORPH_ERROR_HPP_
