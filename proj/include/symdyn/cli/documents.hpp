#pragma once

// JSON documents for graphs, substitutions and matrices.
//
// Every document carries "schema": 1. Parsers throw InvalidArgument with the
// offending field path in the message.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "symdyn/core.hpp"
#include "symdyn/digraph.hpp"
#include "symdyn/randsub.hpp"
#include "symdyn/sft.hpp"

namespace symdyn::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentSchema = 1;

// {"schema": 1, "mode": "vertex" | "edge", "vertices": [names],
//  "edges": [[source, target] | [source, target, label], ...]}
Digraph parse_graph(const Json& doc);
Json emit_graph(const Digraph& g);

// {"schema": 1, "images": {"a": ["ab", "ba"], "b": ["a"]}}
// Keys define the alphabet in document order. With single-character keys an
// image may be a string; otherwise it is an array of symbol names.
RandomSubstitution parse_substitution(const Json& doc);
Json emit_substitution(const RandomSubstitution& s);

struct MatrixDocument {
  ZeroOneMatrix matrix;
  Alphabet alphabet;
};

// {"schema": 1, "matrix": [[0/1, ...], ...], "alphabet": [names]?}
// The alphabet defaults to "0", "1", ...
MatrixDocument parse_matrix(const Json& doc);
Json emit_matrix(const ZeroOneMatrix& m, const Alphabet& alphabet);

// A word as a string (single-character alphabets) or an array of names.
Json emit_word(const Alphabet& alphabet, const Word& w);

// Graphs shipped with the tool: "mickey" (vertex shift), "golden" (vertex
// shift), "edge-mickey" (edge shift).
std::optional<Digraph> builtin_graph(std::string_view name);

// Parses JSON text, turning syntax errors into InvalidArgument.
Json parse_json_text(std::string_view text, std::string_view source);

}  // namespace symdyn::cli
