#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chipfire/dollar_game.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace chipfire {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; malformed input is InvalidInput.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Integers whose magnitude is at most 2^53 become JSON numbers, larger ones
/// decimal strings. Both forms are accepted on input.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"vertices": [...], "edges": [[u, v], ...]}
Multigraph graph_from_json(const Json& j);
Json graph_to_json(const Multigraph& g);

/// {"v1": 2, "v4": -1}; omitted vertices are 0. Output lists every vertex in
/// the graph's order.
Divisor divisor_from_json(const Multigraph& g, const Json& j);
Json divisor_to_json(const Multigraph& g, const Divisor& d);
Json script_to_json(const Multigraph& g, const FiringScript& f);

MoveKind move_kind_from_string(const std::string& s);
std::string to_string(MoveKind kind);

/// {"vertex": "a", "kind": "borrow"}
Move move_from_json(const Multigraph& g, const Json& j);
Json move_to_json(const Multigraph& g, const Move& m);
/// A JSON array of moves.
std::vector<Move> moves_from_json(const Multigraph& g, const Json& j);

VertexIndex vertex_from_json(const Multigraph& g, const Json& j);

}  // namespace chipfire
