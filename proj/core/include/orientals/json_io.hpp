#pragma once

// JSON documents for morphisms, morphism lists and canonical decompositions.
//
//   {"format": 1, "source_dim": m, "target_dim": n,
//    "images": [{"basis": [0,2], "chain": [{"basis": [0,1], "coef": 1}, ...]}, ...]}
//
// Zero images are omitted; images are listed by degree then lexicographically,
// and chain terms lexicographically. Keys are emitted sorted.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orientals/canonical.hpp"
#include "orientals/morphism.hpp"

namespace orientals {

inline constexpr int kJsonFormat = 1;

nlohmann::json to_json(const ChainMap& f);
inline nlohmann::json to_json(const OrMorphism& x) { return to_json(x.map()); }
nlohmann::json to_json(const CanonicalDecomposition& d);
nlohmann::json to_json(const std::vector<OrMorphism>& xs);

// Reads a morphism document. Errors are ParseError positioned by JSON
// pointer; `at` prefixes the pointers of a nested document.
ChainMap chain_map_from_json(const nlohmann::json& doc, const std::string& at = "");

// Parses text (byte offset on syntax errors) into a chain map / certified morphism.
ChainMap parse_chain_map(std::string_view text);
OrMorphism parse_morphism(std::string_view text);

// Parses any JSON text, reporting syntax errors by byte offset.
nlohmann::json parse_json(std::string_view text);

// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace orientals
