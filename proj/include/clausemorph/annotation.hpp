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

// Frame-annotation service: the lexeme queue, clause previews for candidate
// frames, and persistence of the annotated frames.
//
// Endpoints (JSON bodies):
//   GET  /lexemes                  queue with per-lexeme status
//   POST /lexemes/{lemma}/preview  {"frame": ["NOM","ACC"], "sample": k}
//   PUT  /lexemes/{lemma}/frames   {"frames": [["NOM","ACC"], ...]}
//   POST /lexemes/{lemma}/skip
//   GET  /progress                 counts by status
//   GET  /inventory                cases the grammar can realize
//
// AnnotationService holds the logic and is usable without sockets;
// AnnotationServer puts it behind HTTP.

#ifndef CLAUSEMORPH_ANNOTATION_HPP_
#define CLAUSEMORPH_ANNOTATION_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "clausemorph/grammar.hpp"
#include "clausemorph/lexicon.hpp"

namespace clausemorph {

enum class LexemeStatus { kPending, kAnnotated, kSkipped };
std::string_view status_name(LexemeStatus s);

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

class AnnotationService {
 public:
  // Annotations already present in `frames_path` are loaded and their
  // lexemes start out annotated.
  AnnotationService(GrammarSpec grammar, UnimorphData words,
                    std::vector<std::string> queue,
                    std::filesystem::path frames_path,
                    std::size_t max_preview = 200);

  HttpResponse list_lexemes() const;
  HttpResponse preview(const std::string& lemma, std::string_view body) const;
  HttpResponse put_frames(const std::string& lemma, std::string_view body);
  HttpResponse skip(const std::string& lemma);
  HttpResponse progress() const;
  HttpResponse inventory() const;

  // Holding the returned lock makes concurrent writes answer 409.
  std::unique_lock<std::mutex> hold_writer() { return std::unique_lock(write_mu_); }

  const GrammarSpec& grammar() const { return grammar_; }

 private:
  HttpResponse persist(const std::string& lemma, FrameAnnotation fa);

  GrammarSpec grammar_;
  UnimorphData words_;
  std::vector<std::string> queue_;
  std::filesystem::path frames_path_;
  std::size_t max_preview_;

  mutable std::shared_mutex state_mu_;
  std::mutex write_mu_;
  std::map<std::string, LexemeStatus, std::less<>> status_;
  // Persisted annotations in file order, including lemmas outside the queue.
  std::vector<FrameAnnotation> annotations_;
};

// HTTP front end. Requests arriving before set_service() get 503.
class AnnotationServer {
 public:
  AnnotationServer();
  ~AnnotationServer();
  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Serves files from `dir` at / (the annotation UI build).
  void mount_static(const std::filesystem::path& dir);
  void set_service(std::shared_ptr<AnnotationService> service);

  // Binds; port 0 picks a free port. Returns the bound port. Throws kIo.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace clausemorph

#endif  // CLAUSEMORPH_ANNOTATION_HPP_
