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

#include "agora/http_api.hpp"

#include <httplib.h>

#include <map>
#include <thread>

#include "agora/csv.hpp"

namespace agora {

namespace {

constexpr const char* kJson = "application/json";
constexpr std::size_t kDefaultPage = 100;
constexpr std::size_t kMaxPage = 1000;

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message,
                json detail = nullptr) {
  json body{{"error", code}, {"message", message}};
  if (!detail.is_null()) body["detail"] = std::move(detail);
  send(res, http_status_for(code), body);
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& ex) {
    throw BadRequest(std::string("body is not valid JSON: ") + ex.what());
  }
}

Money query_money(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw BadRequest(std::string("missing query parameter '") + name + "'");
  const auto v = csv::parse_int(req.get_param_value(name));
  if (!v) throw BadRequest(std::string("query parameter '") + name + "' must be an integer");
  return *v;
}

std::size_t query_size(const httplib::Request& req, const char* name, std::size_t fallback) {
  if (!req.has_param(name)) return fallback;
  const auto v = csv::parse_int(req.get_param_value(name));
  if (!v || *v < 0) {
    throw BadRequest(std::string("query parameter '") + name + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(*v);
}

json violations_json(const ValidationError& ex) {
  json out = json::array();
  for (const auto& v : ex.violations()) {
    out.push_back(
        json{{"kind", std::string(to_string(v.kind))}, {"subject", v.subject}, {"detail", v.detail}});
  }
  return out;
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

Handler guarded(Handler h) {
  return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
    try {
      h(req, res);
    } catch (const ValidationError& ex) {
      send_error(res, ex.code(), ex.what(), violations_json(ex));
    } catch (const Error& ex) {
      send_error(res, ex.code(), ex.what());
    } catch (const json::exception& ex) {
      send_error(res, "BadRequest", ex.what());
    } catch (const std::exception& ex) {
      send_error(res, "Internal", ex.what());
    }
  };
}

}  // namespace

int http_status_for(const std::string& code) {
  static const std::map<std::string, int> kStatus{
      {"SessionNotFound", 404},     {"NotFound", 404},          {"WrongState", 409},
      {"NotInFrozenSet", 409},      {"BadRequest", 400},        {"ParseError", 400},
      {"BudgetOutOfRange", 422},    {"IncreaseNotAllowed", 422}, {"OutOfScaleScore", 422},
      {"ValidationError", 422},     {"EmptyVoterSet", 422},     {"DuplicateProjectInRanking", 422},
      {"Internal", 500},
  };
  auto it = kStatus.find(code);
  return it == kStatus.end() ? 422 : it->second;
}

json session_summary(const Session& s) {
  json frozen = json::array();
  for (const auto& f : s.frozen()) {
    frozen.push_back(
        json{{"project", f.project_id}, {"original_cost", f.original_cost}, {"cost", f.cost}});
  }
  json out{{"id", s.id()},
           {"state", std::string(to_string(s.state()))},
           {"election_digest", election_digest(s.election())},
           {"total_budget", s.election().total_budget()},
           {"committed_mes_budget", s.committed_mes_budget()},
           {"ledger", s.ledger()},
           {"frozen", std::move(frozen)},
           {"vetoed", s.vetoed()},
           {"last_seq", s.last_seq()},
           {"projects", s.election().project_count()},
           {"voters", s.election().voter_count()}};
  out["report"] = s.report() ? *s.report() : json(nullptr);
  return out;
}

struct HttpServer::Impl {
  SessionStore& store;
  httplib::Server server;
  std::thread worker;

  explicit Impl(SessionStore& s) : store(s) {
    // SO_REUSEADDR only; the library default of SO_REUSEPORT lets a second
    // server share an occupied port.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    routes();
  }

  void routes() {
    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      const json& raw = body.contains("election") ? body.at("election") : body;
      auto election = validate_election(raw.get<ElectionDraft>());
      const auto id = store.create_session(std::move(election));
      send(res, 201, session_summary(*store.get(id)));
    }));

    server.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
      send(res, 200, json{{"sessions", store.session_ids()}});
    }));

    server.Get(R"(/sessions/([^/]+))",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send(res, 200, session_summary(*store.get(req.matches[1])));
               }));

    server.Get(R"(/sessions/([^/]+)/scenario)",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const auto s = store.get_scenario(req.matches[1], query_money(req, "budget"));
                 send(res, 200, json(*s));
               }));

    server.Post(R"(/sessions/([^/]+)/commit)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const json body = parse_body(req);
                  const auto s =
                      store.commit_ratio(req.matches[1], require_member<Money>(body, "mes_budget"));
                  json out = session_summary(*s);
                  out["outcome"] = *s->mes_outcome();
                  send(res, 200, out);
                }));

    server.Post(R"(/sessions/([^/]+)/veto)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const json body = parse_body(req);
                  const auto s = store.veto_project(req.matches[1],
                                                    require_member<std::string>(body, "project"),
                                                    body.value("decided_by", std::string()));
                  send(res, 200, session_summary(*s));
                }));

    server.Post(R"(/sessions/([^/]+)/adjust)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const json body = parse_body(req);
                  const auto s = store.adjust_project_budget(
                      req.matches[1], require_member<std::string>(body, "project"),
                      require_member<Money>(body, "new_cost"));
                  send(res, 200, session_summary(*s));
                }));

    server.Post(R"(/sessions/([^/]+)/rtr/votes)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const auto vote = parse_body(req).get<LikertRecord>();
                  const auto s = store.rtr_vote(req.matches[1], vote);
                  send(res, 200, json{{"accepted", true}, {"seq", s->last_seq()}});
                }));

    server.Get(R"(/sessions/([^/]+)/rtr/report)",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send(res, 200, json(store.rtr_report(req.matches[1])));
               }));

    server.Post(R"(/sessions/([^/]+)/finalize)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const json body = parse_body(req);
                  const auto rankings = body.value("rankings", std::vector<RankingSheet>{});
                  send(res, 200, store.finalize(req.matches[1], rankings));
                }));

    server.Get(R"(/sessions/([^/]+)/events)",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const std::string id = req.matches[1];
                 const auto offset = query_size(req, "offset", 0);
                 const auto limit = std::min(query_size(req, "limit", kDefaultPage), kMaxPage);
                 json out{{"total", store.event_count(id)},
                          {"offset", offset},
                          {"limit", limit},
                          {"events", store.events(id, offset, limit)}};
                 send(res, 200, out);
               }));

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        json body{{"error", res.status == 404 ? "NotFound" : "BadRequest"},
                  {"message", res.status == 404 ? "no such endpoint" : "request rejected"}};
        res.set_content(body.dump(), kJson);
      }
    });
  }
};

HttpServer::HttpServer(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
    if (port_ < 0) throw BindError("cannot bind " + host + " to a free port");
  } else {
    if (!impl_->server.bind_to_port(host, port)) {
      throw BindError("cannot bind " + host + ":" + std::to_string(port));
    }
    port_ = port;
  }
  return port_;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = bind(host, port);
  impl_->worker = std::thread([this] { serve(); });
  impl_->server.wait_until_ready();
  return bound;
}

void HttpServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace agora
