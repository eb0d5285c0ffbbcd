// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON over HTTP front end for a SessionStore.
//
//   POST /sessions                       {election} or a bare election
//   GET  /sessions
//   GET  /sessions/{id}
//   GET  /sessions/{id}/scenario?budget=N
//   POST /sessions/{id}/commit           {mes_budget}
//   POST /sessions/{id}/veto             {project, decided_by}
//   POST /sessions/{id}/adjust           {project, new_cost}
//   POST /sessions/{id}/rtr/votes        {participant_id, statement_id, phase, score}
//   GET  /sessions/{id}/rtr/report
//   POST /sessions/{id}/finalize         {rankings?}
//   GET  /sessions/{id}/events?offset=&limit=
//
// Failures answer {"error": <code>, "message": ...}.

#ifndef AGORA_HTTP_API_HPP_
#define AGORA_HTTP_API_HPP_

#include <memory>
#include <ostream>
#include <string>

#include "agora/session_store.hpp"

namespace agora {

/// HTTP status for an error code as returned by Error::code().
int http_status_for(const std::string& code);

/// Session summary as served by GET /sessions/{id}.
json session_summary(const Session& s);

class HttpServer {
 public:
  explicit HttpServer(SessionStore& store);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port; throws BindError.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Requires bind().
  void serve();
  /// bind() then serve() on a background thread.
  int start(const std::string& host, int port);
  void stop();
  int port() const noexcept { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  StoreOptions store;
};

}  // namespace agora

#endif  // AGORA_HTTP_API_HPP_
