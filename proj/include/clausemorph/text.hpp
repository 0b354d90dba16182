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

// Small string helpers shared by the loaders.

#ifndef CLAUSEMORPH_TEXT_HPP_
#define CLAUSEMORPH_TEXT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clausemorph::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> split_ws(std::string_view s);
std::string to_upper(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
// Collapses whitespace runs to one space and trims both ends.
std::string normalize_spaces(std::string_view s);
bool starts_with_ci(std::string_view s, std::string_view prefix);

// Reads a whole file; throws Error{kIo}.
std::string read_file(const std::filesystem::path& path);
// Splits file content into lines, stripping a trailing '\r' on each.
std::vector<std::string_view> lines(std::string_view content);
// Writes via a temporary sibling and rename, so readers never observe a
// half-written file. Throws Error{kIo}.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace clausemorph::text

#endif  // CLAUSEMORPH_TEXT_HPP_
