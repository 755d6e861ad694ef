#pragma once

#include <string>

#include <json.hpp>

#include "cofix/instance.hpp"

namespace cofix {

/// Parses an instance document. Finite instances carry "elements", "order"
/// (explicit reflexive transitively-closed relation, or Hasse cover pairs
/// when from_hasse is set), "metric" (rationals as "p/q" strings or
/// integers), "f", "g", optional "Y" and "x0". Interval instances carry
/// "kind": "interval", rational "lo"/"hi", built-in "f_name"/"g_name",
/// optional "declared", "x0" and "grid".
/// Throws Error(ParseError) on malformed documents and the space validation
/// errors on axiom violations.
Instance parse_instance(const nlohmann::json& doc, bool from_hasse = false);

/// Canonical serialization: parse(serialize(i)) == serialize-identical i.
nlohmann::json instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path, bool from_hasse = false);

/// Resolves a user-supplied path: used verbatim if it exists, otherwise
/// looked up under $COFIX_DATA_DIR.
std::string resolve_instance_path(const std::string& path);

}  // namespace cofix
