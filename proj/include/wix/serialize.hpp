#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wix/tree.hpp"

namespace wix {

/// `{"n": 4, "edges": [[0,1], [1,2], [2,3]]}`: edges normalized u < v and
/// sorted. The layout is fixed byte for byte.
std::string to_json_string(const Tree& t);

/// Undirected DOT, one `u -- v;` statement per edge.
std::string to_dot(const Tree& t);

nlohmann::json to_json(const Tree& t);

/// Accepts edges in any order or orientation. Errors: kParse plus everything
/// tree_from_edges raises.
Tree tree_from_json(const nlohmann::json& j);
Tree tree_from_json_string(std::string_view text);

}  // namespace wix
