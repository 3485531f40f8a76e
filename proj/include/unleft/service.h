// Copyright 2026 The Unleft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Stateless JSON endpoints:
//
//   POST /analyze {grammar, start?}                 -> analysis report
//   POST /rewrite {grammar, start?}                 -> {grammar, provenance}
//                                                      or {error, ...}
//   POST /parse   {grammar, input, start?, lexicon?, abridged?, maxDepth?,
//                  provenance?}                     -> parse result
//
// Malformed requests and unreadable grammars get a 400 with
// {"error": <kind>, "message": ...}.

#ifndef UNLEFT_SERVICE_H_
#define UNLEFT_SERVICE_H_

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

namespace unleft {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

ServiceResponse HandleAnalyze(std::string_view request_body);
ServiceResponse HandleRewrite(std::string_view request_body);
ServiceResponse HandleParse(std::string_view request_body);

class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until Stop(). Returns false if the address cannot be bound.
  bool Listen(const std::string& host, int port);

  // Binds an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  // Serves on the port bound by BindToAnyPort(); blocks until Stop().
  bool ListenAfterBind();

  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace unleft

#endif  // UNLEFT_SERVICE_H_
