#include "wix/serialize.hpp"

#include <sstream>

#include "wix/error.hpp"

namespace wix {

std::string to_json_string(const Tree& t) {
  std::ostringstream os;
  os << "{\"n\": " << t.vertex_count() << ", \"edges\": [";
  bool first = true;
  for (const Edge& e : t.edges()) {
    if (!first) os << ", ";
    first = false;
    os << '[' << e.u << ',' << e.v << ']';
  }
  os << "]}";
  return os.str();
}

std::string to_dot(const Tree& t) {
  std::ostringstream os;
  os << "graph {\n";
  if (t.vertex_count() == 1) os << "  0;\n";
  for (const Edge& e : t.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const Tree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
  return {{"n", t.vertex_count()}, {"edges", std::move(edges)}};
}

Tree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error(ErrorCode::kParse, "expected an object with \"n\" and \"edges\"");
  }
  const auto& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw Error(ErrorCode::kParse, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(jn.get<long long>());
  const auto& jedges = j.at("edges");
  if (!jedges.is_array()) throw Error(ErrorCode::kParse, "\"edges\" must be an array");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(jedges.size());
  for (const auto& e : jedges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || e[0].get<long long>() < 0 || e[1].get<long long>() < 0) {
      throw Error(ErrorCode::kParse, "each edge must be a pair of non-negative integers");
    }
    pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return tree_from_edges(n, pairs);
}

Tree tree_from_json_string(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return tree_from_json(j);
}

}  // namespace wix
