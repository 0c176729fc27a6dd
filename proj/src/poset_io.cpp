#include "syt/poset_io.hpp"

#include <json.hpp>

#include "syt/errors.hpp"

namespace syt {

std::string poset_to_json(const FinitePoset& p, const std::string& order_name, int n, bool full) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["order"] = order_name;
  doc["elements"] = p.elements();
  doc["covers"] = p.covers();
  if (full) doc["comparabilities"] = p.comparabilities();
  return doc.dump(2) + "\n";
}

LoadedPoset poset_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("poset document is not valid JSON: ") + e.what());
  }
  try {
    LoadedPoset loaded;
    loaded.n = doc.at("n").get<int>();
    loaded.order_name = doc.at("order").get<std::string>();
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    auto covers = doc.at("covers").get<std::vector<std::pair<int, int>>>();
    loaded.poset = FinitePoset::from_edges(std::move(elements), covers);
    return loaded;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("poset document has a malformed field: ") + e.what());
  }
}

std::string poset_to_dot(const FinitePoset& p, const std::string& order_name) {
  std::string out = "digraph \"" + order_name + "\" {\n  rankdir=BT;\n";
  for (int v = 0; v < p.size(); ++v) {
    std::string label = p.elements()[static_cast<std::size_t>(v)];
    out += "  n" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace syt
