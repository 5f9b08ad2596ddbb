#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "orbvar/domino_tableau.hpp"
#include "orbvar/insertion.hpp"

namespace orbvar {

using Json = nlohmann::ordered_json;

/// {"type":"B"|"C", ["core":[1,1],] "dominoes":[{"label":k,"cells":[[r,c],[r,c]]}, ...]}
/// The core entry is written for type B and optional on input.
Json toJson(const DominoTableau& tableau);
DominoTableau tableauFromJson(const Json& doc);

/// {"left": <tableau>, "right": <tableau>}
Json toJson(const TableauPair& pair);
TableauPair pairFromJson(const Json& doc);

/// Compact JSON text; deserialize rejects malformed documents and tableaux
/// that are not standard.
std::string serialize(const DominoTableau& tableau);
DominoTableau deserialize(std::string_view text);

}  // namespace orbvar
