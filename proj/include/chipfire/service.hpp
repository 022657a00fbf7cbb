#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "chipfire/io.hpp"

namespace chipfire {

struct ServiceResponse {
  int status = 200;
  Json body;
};

/// In-memory dollar-game sessions plus stateless analysis endpoints.
///
///   POST /session              {graph, divisor}       -> session state
///   GET  /session/{id}                                -> session state
///   POST /session/{id}/move    {vertex, kind}         -> session state
///   GET  /session/{id}/hint                           -> {winnable, suggested_move, rank}
///   GET  /graph/analyze?graph=<json>  (or POST {graph}) -> invariants
///   POST /rank                 {graph, divisor}       -> {rank, certificate}
class GameService {
 public:
  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body,
                         const std::map<std::string, std::string>& query = {});

  Json snapshot() const;
  void restore(const Json& snapshot);
  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    GameState game;
    std::int64_t created = 0;
    std::int64_t updated = 0;
    explicit Session(GameState g) : game(std::move(g)) {}
  };

  std::shared_ptr<Session> find_session(const std::string& id) const;
  std::string next_id();
  Json session_json(const Session& s) const;

  ServiceResponse create_session(const Json& request);
  ServiceResponse move(Session& s, const Json& request);
  ServiceResponse hint(Session& s);

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<std::uint64_t> counter_{0};
};

Json analyze_graph(const Multigraph& g);
Json rank_report(const Multigraph& g, const Divisor& d);

/// HTTP front end for a GameService.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called from another thread.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving `service` on host:port until SIGINT/SIGTERM, then writes a
/// snapshot to `snapshot_path` if it is non-empty.
int serve(GameService& service, const std::string& host, int port, const std::string& snapshot_path = {});

}  // namespace chipfire
