#include "symdyn/cli/documents.hpp"

#include <set>
#include <string>
#include <vector>

#include "symdyn/errors.hpp"

namespace symdyn::cli {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidArgument(path + ": " + what);
}

void check_schema(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("schema")) fail("schema", "missing");
  if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != kDocumentSchema)
    fail("schema", "unsupported version (expected " + std::to_string(kDocumentSchema) + ")");
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) fail(key, "missing");
  return doc[key];
}

std::string string_at(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> names_at(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(string_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Alphabet alphabet_at(std::vector<std::string> names, const std::string& path) {
  try {
    return Alphabet(std::move(names));
  } catch (const InvalidArgument& e) {
    fail(path, e.what());
  }
}

Letter symbol_at(const Alphabet& alphabet, const Json& v, const std::string& path,
                 const char* what) {
  const std::string name = string_at(v, path);
  const auto x = alphabet.find(name);
  if (!x) fail(path, std::string("unknown ") + what + " '" + name + "'");
  return *x;
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string(source) + ": malformed JSON: " + e.what());
  }
}

Digraph parse_graph(const Json& doc) {
  check_schema(doc);
  const std::string mode = string_at(field(doc, "mode"), "mode");
  if (mode != "vertex" && mode != "edge") fail("mode", "expected \"vertex\" or \"edge\"");
  const bool edge_mode = mode == "edge";
  const Alphabet vertices = alphabet_at(names_at(field(doc, "vertices"), "vertices"), "vertices");

  const Json& list = field(doc, "edges");
  if (!list.is_array()) fail("edges", "expected an array");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::set<std::string> seen_labels;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const Json& e = list[i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      fail(path, "expected [source, target] or [source, target, label]");
    const Letter s = symbol_at(vertices, e[0], path + "[0]", "vertex");
    const Letter t = symbol_at(vertices, e[1], path + "[1]", "vertex");
    if (edge_mode) {
      if (e.size() != 3) fail(path, "edge-mode graphs need a label on every edge");
      const std::string label = string_at(e[2], path + "[2]");
      if (!seen_labels.insert(label).second)
        fail(path + "[2]", "duplicate edge label '" + label +
                               "' (graphs with repeated labels are not supported)");
      labels.push_back(label);
    } else {
      if (e.size() != 2) fail(path, "vertex-mode edges take no label");
      if (!seen_pairs.emplace(s, t).second) fail(path, "duplicate edge");
    }
    edges.push_back(Edge{s, t});
  }
  try {
    if (edge_mode)
      return Digraph::edge_graph(vertices, std::move(edges),
                                 alphabet_at(std::move(labels), "edges"));
    return Digraph::vertex_graph(vertices, std::move(edges));
  } catch (const InvalidArgument& e) {
    fail("edges", e.what());
  }
}

Json emit_graph(const Digraph& g) {
  Json doc;
  doc["schema"] = kDocumentSchema;
  doc["mode"] = g.mode() == GraphMode::vertex ? "vertex" : "edge";
  doc["vertices"] = g.vertices().symbols();
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edge(e);
    Json item = Json::array({g.vertices().symbol(static_cast<Letter>(ed.source)),
                             g.vertices().symbol(static_cast<Letter>(ed.target))});
    if (g.mode() == GraphMode::edge) item.push_back(g.labels()->symbol(static_cast<Letter>(e)));
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

RandomSubstitution parse_substitution(const Json& doc) {
  check_schema(doc);
  const Json& images = field(doc, "images");
  if (!images.is_object() || images.empty()) fail("images", "expected a nonempty object");
  std::vector<std::string> names;
  for (const auto& item : images.items()) names.push_back(item.key());
  const Alphabet alphabet = alphabet_at(names, "images");

  std::vector<WordSet> sets(alphabet.size());
  std::size_t a = 0;
  for (const auto& item : images.items()) {
    const std::string path = "images." + item.key();
    const Json& list = item.value();
    if (!list.is_array() || list.empty()) fail(path, "expected a nonempty array of words");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string wpath = path + "[" + std::to_string(i) + "]";
      const Json& w = list[i];
      std::vector<std::string> symbols;
      if (w.is_string()) {
        if (!alphabet.single_char())
          fail(wpath, "multi-character alphabets need images as arrays of symbol names");
        symbols = split_code_points(w.get<std::string>());
      } else {
        symbols = names_at(w, wpath);
      }
      if (symbols.empty()) fail(wpath, "empty image word");
      std::vector<Letter> letters;
      for (const std::string& sym : symbols) {
        const auto x = alphabet.find(sym);
        if (!x) fail(wpath, "letter '" + sym + "' is not a key of images");
        letters.push_back(*x);
      }
      sets[a].insert(Word(std::move(letters)));
    }
    ++a;
  }
  return RandomSubstitution(alphabet, std::move(sets));
}

Json emit_word(const Alphabet& alphabet, const Word& w) {
  if (alphabet.single_char()) return alphabet.format(w);
  Json out = Json::array();
  for (Letter x : w) out.push_back(alphabet.symbol(x));
  return out;
}

Json emit_substitution(const RandomSubstitution& s) {
  Json doc;
  doc["schema"] = kDocumentSchema;
  Json images = Json::object();
  for (std::size_t a = 0; a < s.size(); ++a) {
    Json list = Json::array();
    for (const Word& w : s.images(static_cast<Letter>(a)))
      list.push_back(emit_word(s.alphabet(), w));
    images[s.alphabet().symbol(static_cast<Letter>(a))] = std::move(list);
  }
  doc["images"] = std::move(images);
  return doc;
}

MatrixDocument parse_matrix(const Json& doc) {
  check_schema(doc);
  const Json& rows_json = field(doc, "matrix");
  if (!rows_json.is_array() || rows_json.empty()) fail("matrix", "expected a nonempty array");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < rows_json.size(); ++i) {
    const std::string path = "matrix[" + std::to_string(i) + "]";
    const Json& r = rows_json[i];
    if (!r.is_array()) fail(path, "expected an array");
    std::vector<int> row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r[j].is_number_integer())
        fail(path + "[" + std::to_string(j) + "]", "expected 0 or 1");
      row.push_back(r[j].get<int>());
    }
    rows.push_back(std::move(row));
  }
  ZeroOneMatrix m = [&] {
    try {
      return ZeroOneMatrix::from_rows(rows);
    } catch (const InvalidArgument& e) {
      fail("matrix", e.what());
    }
  }();
  std::vector<std::string> names;
  if (doc.contains("alphabet")) {
    names = names_at(doc["alphabet"], "alphabet");
    if (names.size() != m.order()) fail("alphabet", "size does not match the matrix order");
  } else {
    for (std::size_t i = 0; i < m.order(); ++i) names.push_back(std::to_string(i));
  }
  return MatrixDocument{std::move(m), alphabet_at(std::move(names), "alphabet")};
}

Json emit_matrix(const ZeroOneMatrix& m, const Alphabet& alphabet) {
  Json doc;
  doc["schema"] = kDocumentSchema;
  doc["matrix"] = m.rows();
  doc["alphabet"] = alphabet.symbols();
  return doc;
}

std::optional<Digraph> builtin_graph(std::string_view name) {
  if (name == "mickey") {
    return Digraph::vertex_graph(Alphabet::from_chars("0123"),
                                 {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 1}});
  }
  if (name == "golden") {
    return Digraph::vertex_graph(Alphabet::from_chars("01"), {{0, 0}, {0, 1}, {1, 0}});
  }
  if (name == "edge-mickey") {
    // Vertices P, Q, R; two parallel edges P -> Q and a loop at R.
    return Digraph::edge_graph(Alphabet({"P", "Q", "R"}),
                               {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 2}},
                               Alphabet::from_chars("012345"));
  }
  return std::nullopt;
}

}  // namespace symdyn::cli
