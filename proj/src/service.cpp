#include "chipfire/service.hpp"

#include <chrono>
#include <csignal>
#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>

#include "chipfire/errors.hpp"
#include "chipfire/jacobian.hpp"
#include "chipfire/rank.hpp"

namespace chipfire {

namespace {

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

ServiceResponse error(int status, const std::string& message) { return {status, Json{{"error", message}}}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/'))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

Json optional_rank(const Multigraph& g, const Divisor& d) {
  try {
    return Json(rank(g, d).value);
  } catch (const GuardExceeded&) {
    return nullptr;
  }
}

}  // namespace

Json analyze_graph(const Multigraph& g) {
  JacobianStructure js = jacobian_structure(g, 0);
  Json factors = Json::array();
  for (const auto& f : js.nontrivial_factors()) factors.push_back(to_string(f));
  std::int64_t connectivity = edge_connectivity(g);
  return Json{{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"genus", genus(g)},
              {"spanning_trees", to_string(spanning_tree_count(g))},
              {"invariant_factors", std::move(factors)},
              {"edge_connectivity", connectivity == kUnboundedConnectivity ? Json(nullptr) : Json(connectivity)}};
}

Json rank_report(const Multigraph& g, const Divisor& d) {
  Rank r = rank(g, d);
  return Json{{"rank", r.value}, {"certificate", r.certificate ? divisor_to_json(g, *r.certificate) : Json(nullptr)}};
}

std::string GameService::next_id() {
  static thread_local std::mt19937_64 rng(std::random_device{}());
  std::ostringstream out;
  out << "s" << ++counter_ << "-" << std::hex << (rng() & 0xffffffffu);
  return out.str();
}

std::shared_ptr<GameService::Session> GameService::find_session(const std::string& id) const {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t GameService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

Json GameService::session_json(const Session& s) const {
  const Multigraph& g = s.game.graph();
  Json log = Json::array();
  for (const Move& m : s.game.log()) log.push_back(move_to_json(g, m));
  return Json{{"id", s.id},
              {"graph", graph_to_json(g)},
              {"initial", divisor_to_json(g, s.game.initial())},
              {"config", divisor_to_json(g, s.game.config())},
              {"total", integer_to_json(s.game.total())},
              {"genus", genus(g)},
              {"won", is_effective(s.game.config())},
              {"log", std::move(log)},
              {"created", s.created},
              {"updated", s.updated}};
}

ServiceResponse GameService::create_session(const Json& request) {
  auto g = std::make_shared<const Multigraph>(graph_from_json(request.at("graph")));
  Divisor d = request.contains("divisor") ? divisor_from_json(*g, request.at("divisor")) : Divisor(g->vertex_count());
  auto s = std::make_shared<Session>(GameState(g, std::move(d)));
  s->id = next_id();
  s->created = s->updated = now_ms();
  {
    std::lock_guard lock(sessions_mutex_);
    sessions_[s->id] = s;
  }
  return {201, session_json(*s)};
}

ServiceResponse GameService::move(Session& s, const Json& request) {
  Move m = move_from_json(s.game.graph(), request);
  s.game.apply(m);
  s.updated = now_ms();
  return {200, session_json(s)};
}

ServiceResponse GameService::hint(Session& s) {
  const Multigraph& g = s.game.graph();
  Json out{{"winnable", false}, {"suggested_move", nullptr}, {"rank", nullptr}};
  if (is_winnable(s.game)) {
    out["winnable"] = true;
    if (!is_effective(s.game.config())) {
      auto strategy = winning_strategy(s.game);
      if (strategy && !strategy->moves.empty()) {
        out["suggested_move"] = move_to_json(g, strategy->moves.front());
        out["moves_remaining"] = strategy->moves.size();
      }
    }
  }
  out["rank"] = optional_rank(g, s.game.config());
  return {200, out};
}

ServiceResponse GameService::handle(const std::string& method, const std::string& path, const std::string& body,
                                    const std::map<std::string, std::string>& query) {
  try {
    const std::vector<std::string> parts = split_path(path);
    auto request_body = [&] { return body.empty() ? Json::object() : parse_json(body); };

    if (parts.size() == 1 && parts[0] == "session") {
      if (method != "POST") return error(405, "method not allowed");
      return create_session(request_body());
    }
    if (parts.size() >= 2 && parts[0] == "session") {
      auto s = find_session(parts[1]);
      if (!s) return error(404, "unknown session");
      std::lock_guard lock(s->mutex);
      if (parts.size() == 2) {
        if (method != "GET") return error(405, "method not allowed");
        return {200, session_json(*s)};
      }
      if (parts.size() == 3 && parts[2] == "move") {
        if (method != "POST") return error(405, "method not allowed");
        return move(*s, request_body());
      }
      if (parts.size() == 3 && parts[2] == "hint") {
        if (method != "GET") return error(405, "method not allowed");
        return hint(*s);
      }
      return error(404, "not found");
    }
    if (parts.size() == 2 && parts[0] == "graph" && parts[1] == "analyze") {
      Json graph;
      if (method == "GET") {
        auto it = query.find("graph");
        if (it == query.end()) return error(400, "missing 'graph' query parameter");
        graph = parse_json(it->second);
      } else if (method == "POST") {
        graph = request_body().at("graph");
      } else {
        return error(405, "method not allowed");
      }
      return {200, analyze_graph(graph_from_json(graph))};
    }
    if (parts.size() == 1 && parts[0] == "rank") {
      if (method != "POST") return error(405, "method not allowed");
      Json request = request_body();
      Multigraph g = graph_from_json(request.at("graph"));
      return {200, rank_report(g, divisor_from_json(g, request.at("divisor")))};
    }
    return error(404, "not found");
  } catch (const InvalidInput& e) {
    return error(400, e.what());
  } catch (const PreconditionViolation& e) {
    return error(400, e.what());
  } catch (const Json::exception& e) {
    return error(400, std::string("bad payload: ") + e.what());
  } catch (const GuardExceeded& e) {
    return {422, Json{{"error", e.what()}, {"guard", e.guard()}}};
  }
}

Json GameService::snapshot() const {
  std::lock_guard lock(sessions_mutex_);
  Json out = Json::array();
  for (const auto& [id, s] : sessions_) {
    std::lock_guard session_lock(s->mutex);
    const Multigraph& g = s->game.graph();
    Json log = Json::array();
    for (const Move& m : s->game.log()) log.push_back(move_to_json(g, m));
    out.push_back(Json{{"id", id},
                       {"graph", graph_to_json(g)},
                       {"initial", divisor_to_json(g, s->game.initial())},
                       {"log", std::move(log)},
                       {"created", s->created},
                       {"updated", s->updated}});
  }
  return out;
}

void GameService::restore(const Json& snapshot) {
  if (!snapshot.is_array()) throw InvalidInput("snapshot must be an array of sessions");
  std::map<std::string, std::shared_ptr<Session>> restored;
  try {
    for (const Json& entry : snapshot) {
      auto g = std::make_shared<const Multigraph>(graph_from_json(entry.at("graph")));
      auto s = std::make_shared<Session>(GameState(g, divisor_from_json(*g, entry.at("initial"))));
      for (const Move& m : moves_from_json(*g, entry.at("log"))) s->game.apply(m);
      s->id = entry.at("id").get<std::string>();
      s->created = entry.value("created", std::int64_t{0});
      s->updated = entry.value("updated", std::int64_t{0});
      restored[s->id] = s;
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad snapshot: ") + e.what());
  }
  std::lock_guard lock(sessions_mutex_);
  for (auto& [id, s] : restored) sessions_[id] = s;
  counter_ += restored.size();
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>()) {
  auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query(req.params.begin(), req.params.end());
    ServiceResponse r = service.handle(req.method, req.path, req.body, query);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
    res.set_header("Access-Control-Allow-Origin", "*");
  };
  impl_->server.Get(R"(/.*)", dispatch);
  impl_->server.Post(R"(/.*)", dispatch);
  impl_->server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

namespace {
HttpServer* active_server = nullptr;
extern "C" void stop_active_server(int) {
  if (active_server) active_server->stop();
}
}  // namespace

int serve(GameService& service, const std::string& host, int port, const std::string& snapshot_path) {
  if (!snapshot_path.empty()) {
    std::ifstream existing(snapshot_path);
    if (existing) {
      std::stringstream buffer;
      buffer << existing.rdbuf();
      service.restore(parse_json(buffer.str()));
    }
  }
  HttpServer server(service);
  if (server.bind(host, port) < 0) return 1;
  active_server = &server;
  std::signal(SIGINT, stop_active_server);
  std::signal(SIGTERM, stop_active_server);
  bool ok = server.listen();
  active_server = nullptr;

  if (!snapshot_path.empty()) {
    std::ofstream out(snapshot_path);
    out << service.snapshot().dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace chipfire
