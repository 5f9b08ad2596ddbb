#include "orbvar/serialization.hpp"

#include <stdexcept>

namespace orbvar {

Json toJson(const DominoTableau& tableau) {
  Json doc;
  doc["type"] = std::string(1, toChar(tableau.type()));
  if (tableau.hasCore()) doc["core"] = Json::array({1, 1});
  Json dominoes = Json::array();
  for (const auto& d : tableau.dominoes()) {
    Json item;
    item["label"] = d.label();
    item["cells"] = Json::array({Json::array({d.first().row, d.first().col}),
                                 Json::array({d.second().row, d.second().col})});
    dominoes.push_back(std::move(item));
  }
  doc["dominoes"] = std::move(dominoes);
  return doc;
}

namespace {

Square squareFromJson(const Json& cell) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() || !cell[1].is_number_integer()) {
    throw std::invalid_argument("cell must be [row, col]");
  }
  return Square{cell[0].get<int>(), cell[1].get<int>()};
}

}  // namespace

DominoTableau tableauFromJson(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("tableau must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string()) throw std::invalid_argument("tableau needs a \"type\"");
  const LieType type = parseLieType(doc["type"].get<std::string>());
  if (doc.contains("core")) {
    if (type != LieType::B || squareFromJson(doc["core"]) != Square{1, 1}) {
      throw std::invalid_argument("only type B tableaux carry a core, at [1,1]");
    }
  }
  if (!doc.contains("dominoes") || !doc["dominoes"].is_array()) {
    throw std::invalid_argument("tableau needs a \"dominoes\" array");
  }
  std::vector<Domino> dominoes;
  for (const auto& item : doc["dominoes"]) {
    if (!item.is_object() || !item.contains("label") || !item["label"].is_number_integer() ||
        !item.contains("cells") || !item["cells"].is_array() || item["cells"].size() != 2) {
      throw std::invalid_argument("domino must be {\"label\":k,\"cells\":[[r,c],[r,c]]}");
    }
    dominoes.emplace_back(item["label"].get<int>(), squareFromJson(item["cells"][0]),
                          squareFromJson(item["cells"][1]));
  }
  return DominoTableau(type, std::move(dominoes));
}

Json toJson(const TableauPair& pair) {
  Json doc;
  doc["left"] = toJson(pair.left);
  doc["right"] = toJson(pair.right);
  return doc;
}

TableauPair pairFromJson(const Json& doc) {
  if (!doc.is_object() || !doc.contains("left") || !doc.contains("right")) {
    throw std::invalid_argument("pair must be {\"left\":...,\"right\":...}");
  }
  return TableauPair(tableauFromJson(doc["left"]), tableauFromJson(doc["right"]));
}

std::string serialize(const DominoTableau& tableau) { return toJson(tableau).dump(); }

DominoTableau deserialize(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed tableau document: ") + e.what());
  }
  auto tableau = tableauFromJson(doc);
  if (auto check = validate(tableau); !check) throw DomainError("tableau is not standard: " + check.diagnostic);
  return tableau;
}

}  // namespace orbvar
