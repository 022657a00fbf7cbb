#include "chipfire/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "chipfire/dollar_game.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/io.hpp"
#include "chipfire/jacobian.hpp"
#include "chipfire/lattice.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/sandpile.hpp"
#include "chipfire/service.hpp"

namespace chipfire {

namespace {

struct Options {
  bool pretty = false;
  std::string graph, divisor, config, script, base, policy = "lowest";
  std::string host = "127.0.0.1", snapshot;
  std::uint64_t seed = 0, cap = kDefaultSandpileCap;
  int port = 8080;
};

VertexIndex base_vertex(const Multigraph& g, const std::string& name) { return name.empty() ? 0 : g.index_of(name); }

Json strategy_json(const Multigraph& g, const Strategy& s) {
  Json moves = Json::array();
  for (const Move& m : s.moves) moves.push_back(move_to_json(g, m));
  return Json{{"moves", std::move(moves)}, {"step_bound", integer_to_json(s.step_bound)}};
}

Json run_command(const std::string& command, const Options& o, GameService* service_out) {
  Multigraph g = graph_from_json(read_json_file(o.graph));
  auto load_divisor = [&] { return divisor_from_json(g, read_json_file(o.divisor)); };

  if (command == "rank") return rank_report(g, load_divisor());
  if (command == "reduce") {
    ReducedDivisor r = reduce(g, load_divisor(), base_vertex(g, o.base));
    return Json{{"base", g.name(r.base)}, {"reduced", divisor_to_json(g, r.divisor)}, {"script", script_to_json(g, r.script)}};
  }
  if (command == "linsys") {
    LinearSystem ls = linear_system(g, load_divisor());
    Json members = Json::array();
    for (const Divisor& e : ls.members) members.push_back(divisor_to_json(g, e));
    return Json{{"count", ls.members.size()}, {"members", std::move(members)}};
  }
  if (command == "jacobian") {
    Json out = analyze_graph(g);
    return Json{{"invariant_factors", out["invariant_factors"]}, {"order", out["spanning_trees"]}, {"genus", genus(g)}};
  }
  if (command == "lattice") {
    LatticeDiagnostics diag = lattice_diagnostics(g);
    OrientedEdgeSpace space = boundary_operators(g);
    auto opt = [](const std::optional<Integer>& x) { return x ? integer_to_json(*x) : Json(nullptr); };
    auto girth_value = girth(g);
    std::int64_t connectivity = edge_connectivity(g);
    Json flow_factors = Json::array(), cut_factors = Json::array();
    for (const auto& f : quotient_group(flow_lattice(g, space)))
      if (f > 1) flow_factors.push_back(to_string(f));
    for (const auto& f : quotient_group(cut_lattice(g, space)))
      if (f > 1) cut_factors.push_back(to_string(f));
    return Json{{"flow_rank", genus(g)},
                {"cut_rank", g.vertex_count() - 1},
                {"flow_min_norm", opt(diag.flow_min_norm)},
                {"cut_min_norm", opt(diag.cut_min_norm)},
                {"flow_even", diag.flow_even},
                {"cut_even", diag.cut_even},
                {"flow_quotient_factors", std::move(flow_factors)},
                {"cut_quotient_factors", std::move(cut_factors)},
                {"girth", girth_value ? Json(*girth_value) : Json(nullptr)},
                {"edge_connectivity", connectivity == kUnboundedConnectivity ? Json(nullptr) : Json(connectivity)},
                {"bipartite", is_bipartite(g)},
                {"eulerian", is_eulerian(g)}};
  }
  if (command == "play") {
    GameState s(std::make_shared<const Multigraph>(g), load_divisor());
    if (!o.script.empty())
      for (const Move& m : moves_from_json(g, read_json_file(o.script))) s.apply(m);
    Json log = Json::array();
    for (const Move& m : s.log()) log.push_back(move_to_json(g, m));
    return Json{{"config", divisor_to_json(g, s.config())},
                {"total", integer_to_json(s.total())},
                {"won", is_effective(s.config())},
                {"winnable", is_winnable(s)},
                {"log", std::move(log)}};
  }
  if (command == "winnable") {
    GameState s(std::make_shared<const Multigraph>(g), load_divisor());
    auto strategy = winning_strategy(s);
    return Json{{"winnable", strategy.has_value()}, {"strategy", strategy ? strategy_json(g, *strategy) : Json(nullptr)}};
  }
  if (command == "sandpile") {
    SandpileConfig c(divisor_from_json(g, read_json_file(o.config)));
    FiringPolicy policy;
    if (o.policy == "lowest") policy = lowest_index_policy();
    else if (o.policy == "random") policy = random_policy(o.seed);
    else if (o.policy == "round-robin") policy = round_robin_policy(g.vertex_count());
    else throw InvalidInput("unknown policy '" + o.policy + "'");
    RunResult r = run(g, c, policy, o.cap);
    bool terminated = r.outcome == RunResult::Outcome::Terminated;
    return Json{{"outcome", terminated ? "terminated" : "infinite"},
                {"terminal", r.terminal ? divisor_to_json(g, *r.terminal) : Json(nullptr)},
                {"move_count", r.move_count},
                {"fired", script_to_json(g, r.fired)},
                {"reason", r.reason},
                {"finite_by_duality", finiteness_via_duality(g, c)}};
  }
  (void)service_out;
  throw InvalidInput("unknown command " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisors, ranks, Jacobians and chip-firing games on multigraphs", "chipfire"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "Graph JSON file")->required(); };
  auto add_divisor = [&](CLI::App* sub) { sub->add_option("--divisor", o.divisor, "Divisor JSON file")->required(); };

  auto* rank_cmd = app.add_subcommand("rank", "Rank r(D) with a failure certificate");
  add_graph(rank_cmd);
  add_divisor(rank_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced divisor and firing script");
  add_graph(reduce_cmd);
  add_divisor(reduce_cmd);
  reduce_cmd->add_option("--base", o.base, "Base vertex name (default: first vertex)");
  auto* linsys_cmd = app.add_subcommand("linsys", "List the complete linear system |D|");
  add_graph(linsys_cmd);
  add_divisor(linsys_cmd);
  auto* jac_cmd = app.add_subcommand("jacobian", "Invariant factors of Jac(G)");
  add_graph(jac_cmd);
  auto* lattice_cmd = app.add_subcommand("lattice", "Flow and cut lattice diagnostics");
  add_graph(lattice_cmd);
  auto* play_cmd = app.add_subcommand("play", "Replay dollar-game moves");
  add_graph(play_cmd);
  add_divisor(play_cmd);
  play_cmd->add_option("--script", o.script, "Moves JSON file");
  auto* winnable_cmd = app.add_subcommand("winnable", "Winnability and a borrowing strategy");
  add_graph(winnable_cmd);
  add_divisor(winnable_cmd);
  auto* sandpile_cmd = app.add_subcommand("sandpile", "Run the constrained chip-firing game");
  add_graph(sandpile_cmd);
  sandpile_cmd->add_option("--config", o.config, "Chip configuration JSON file")->required();
  sandpile_cmd->add_option("--policy", o.policy, "lowest | random | round-robin");
  sandpile_cmd->add_option("--seed", o.seed, "Seed for the random policy");
  sandpile_cmd->add_option("--cap", o.cap, "Move cap");
  auto* serve_cmd = app.add_subcommand("serve", "Serve the game API over HTTP");
  serve_cmd->add_option("--port", o.port, "Port");
  serve_cmd->add_option("--host", o.host, "Bind address");
  serve_cmd->add_option("--snapshot", o.snapshot, "Session snapshot file, loaded at start and written at exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "serve") {
      GameService service;
      err << "listening on " << o.host << ':' << o.port << '\n';
      return serve(service, o.host, o.port, o.snapshot) ? kExitFailure : kExitOk;
    }
    Json result = run_command(command, o, nullptr);
    out << (o.pretty ? result.dump(2) : result.dump()) << '\n';
    return kExitOk;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.guard() << ": " << e.what() << '\n';
    return kExitGuard;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace chipfire
