#include "chipfire/io.hpp"

#include <fstream>
#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

const Integer kMaxExactJsonInteger = Integer(1) << 53;

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidInput(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json integer_to_json(const Integer& value) {
  if (value <= kMaxExactJsonInteger && value >= -kMaxExactJsonInteger) return Json(static_cast<std::int64_t>(value));
  return Json(to_string(value));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput("expected an integer or a decimal string");
}

Multigraph graph_from_json(const Json& j) {
  const Json& vertices = member(j, "vertices");
  const Json& edges = member(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw InvalidInput("'vertices' and 'edges' must be arrays");
  std::vector<std::string> names;
  for (const Json& v : vertices) names.push_back(string_value(v, "vertex name"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a pair of vertex names");
    pairs.emplace_back(string_value(e[0], "edge endpoint"), string_value(e[1], "edge endpoint"));
  }
  return Multigraph(std::move(names), pairs);
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({g.name(e.u), g.name(e.v)}));
  return Json{{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

Divisor divisor_from_json(const Multigraph& g, const Json& j) {
  if (!j.is_object()) throw InvalidInput("divisor must be an object mapping vertex names to integers");
  Divisor d(g.vertex_count());
  for (const auto& [name, value] : j.items()) {
    auto v = g.find(name);
    if (!v) throw InvalidInput("unknown vertex '" + name + "'");
    d[*v] = integer_from_json(value);
  }
  return d;
}

Json divisor_to_json(const Multigraph& g, const Divisor& d) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < d.size(); ++v) out[g.name(v)] = integer_to_json(d[v]);
  return out;
}

Json script_to_json(const Multigraph& g, const FiringScript& f) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < f.size(); ++v) out[g.name(v)] = integer_to_json(f[v]);
  return out;
}

MoveKind move_kind_from_string(const std::string& s) {
  if (s == "borrow") return MoveKind::Borrow;
  if (s == "lend") return MoveKind::Lend;
  throw InvalidInput("move kind must be 'borrow' or 'lend'");
}

std::string to_string(MoveKind kind) { return kind == MoveKind::Borrow ? "borrow" : "lend"; }

VertexIndex vertex_from_json(const Multigraph& g, const Json& j) {
  std::string name = string_value(j, "vertex");
  auto v = g.find(name);
  if (!v) throw InvalidInput("unknown vertex '" + name + "'");
  return *v;
}

Move move_from_json(const Multigraph& g, const Json& j) {
  return {vertex_from_json(g, member(j, "vertex")), move_kind_from_string(string_value(member(j, "kind"), "kind"))};
}

Json move_to_json(const Multigraph& g, const Move& m) { return Json{{"vertex", g.name(m.vertex)}, {"kind", to_string(m.kind)}}; }

std::vector<Move> moves_from_json(const Multigraph& g, const Json& j) {
  if (!j.is_array()) throw InvalidInput("moves must be an array");
  std::vector<Move> moves;
  for (const Json& m : j) moves.push_back(move_from_json(g, m));
  return moves;
}

}  // namespace chipfire
