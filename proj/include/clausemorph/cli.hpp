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

// Run configuration and the subcommands behind the clausemorph executable.
//
// A config is a JSON object; relative paths resolve against the config
// file's directory:
//
//   {
//     "language": "eng",
//     "grammar": "../data/eng/eng.grammar",
//     "unimorph": "../data/eng/unimorph.tsv",
//     "frequency": "../data/eng/freq.txt",
//     "exclude": "../data/eng/exclude.txt",
//     "frames": "../data/eng/frames.tsv",
//     "output_dir": "../out/eng",
//     "flags": {"formal": false},
//     "tables": {"max": 500, "threads": 0},
//     "tasks": {"kinds": ["inflection"], "total": 10000,
//               "ratios": [0.8, 0.1, 0.1], "lexemes": [400, 50, 50],
//               "seed": 7, "flat_features": false,
//               "curve_sizes": [], "curve_lexemes": []},
//     "serve": {"host": "127.0.0.1", "port": 8080, "queue": 50,
//               "static_dir": ""}
//   }
//
// Every key except "language" and "grammar" is optional.

#ifndef CLAUSEMORPH_CLI_HPP_
#define CLAUSEMORPH_CLI_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "clausemorph/sampler.hpp"

namespace clausemorph {

struct RunConfig {
  std::string language;
  std::filesystem::path grammar;
  std::filesystem::path unimorph;
  std::filesystem::path frequency;
  std::filesystem::path exclude;
  std::filesystem::path frames;
  std::filesystem::path output_dir = "out";
  std::map<std::string, bool> flags;

  std::size_t max_tables = 500;
  unsigned threads = 0;

  std::vector<TaskKind> tasks{TaskKind::kInflection, TaskKind::kReinflection,
                              TaskKind::kAnalysis};
  std::size_t total = 10000;
  std::array<double, 3> ratios{0.8, 0.1, 0.1};
  std::array<std::size_t, 3> lexemes{400, 50, 50};
  std::uint64_t seed = 7;
  bool flat_features = false;
  std::vector<std::size_t> curve_sizes;
  std::vector<std::size_t> curve_lexemes;

  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t queue = 50;
  std::filesystem::path static_dir;

  std::filesystem::path tables_path() const { return output_dir / "tables.tsv"; }
  std::filesystem::path tasks_dir() const { return output_dir / "tasks"; }
};

// Throws kIo, kInvalidArgument (located by config path).
RunConfig parse_config(std::string_view json_text,
                       const std::filesystem::path& base_dir,
                       std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// Checks the ratios, the seed range and that the input files exist.
// Throws kInvalidArgument or kIo.
void check_config(const RunConfig& config, bool need_lexicon);

// Each command writes its report to `out` and returns the exit code;
// module errors propagate as Error.
int cmd_validate_grammar(const RunConfig& config, std::ostream& out);
int cmd_build_tables(const RunConfig& config, std::ostream& out);
int cmd_sample_tasks(const RunConfig& config, std::ostream& out);

struct EvalRequest {
  TaskKind task = TaskKind::kInflection;
  std::filesystem::path gold;
  std::vector<std::filesystem::path> predictions;  // one file per run
  std::filesystem::path report;                    // JSON report, optional
};
int cmd_evaluate(const RunConfig& config, const EvalRequest& request,
                 std::ostream& out);

// Stats over table TSVs; the configured tables file when `paths` is empty.
int cmd_stats(const RunConfig& config,
              const std::vector<std::filesystem::path>& paths, bool json,
              std::ostream& out);

// Blocks until SIGINT or SIGTERM.
int cmd_serve(const RunConfig& config, std::ostream& out);

// Full command line. 0 success, 1 validation or runtime error, 2 bad usage.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace clausemorph

#endif  // CLAUSEMORPH_CLI_HPP_
