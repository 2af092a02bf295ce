#pragma once

// Finite essential digraphs, simple cycles and cycle decomposition.
//
// A graph is read either as a vertex shift (letters are vertices, at most one
// edge per ordered vertex pair) or as an edge shift (letters are edges, which
// carry pairwise distinct labels; parallel edges are allowed). In both modes
// letter i is vertex i, respectively edge i.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symdyn/core.hpp"

namespace symdyn {

enum class GraphMode { vertex, edge };

struct Edge {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Digraph {
 public:
  // Throws InvalidArgument on out-of-range endpoints, duplicate edges, or a
  // vertex lacking an incoming or outgoing edge.
  static Digraph vertex_graph(Alphabet vertices, std::vector<Edge> edges);

  // `labels[i]` is the label of `edges[i]`; the Alphabet type already
  // guarantees the labels are distinct.
  static Digraph edge_graph(Alphabet vertices, std::vector<Edge> edges,
                            Alphabet labels);

  GraphMode mode() const noexcept { return mode_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const Alphabet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  // The alphabet of the shift presented by this graph.
  const Alphabet& letters() const noexcept {
    return mode_ == GraphMode::vertex ? vertices_ : *labels_;
  }
  const std::optional<Alphabet>& labels() const noexcept { return labels_; }

  // Outgoing edge indices of v, ascending.
  std::span<const std::size_t> out_edges(std::size_t v) const {
    return out_.at(v);
  }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_.at(v); }

  // Edge index of (s, t); vertex mode only has at most one.
  std::optional<std::size_t> find_edge(std::size_t s, std::size_t t) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.mode_ == b.mode_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  Digraph(GraphMode mode, Alphabet vertices, std::vector<Edge> edges,
          std::optional<Alphabet> labels);

  GraphMode mode_;
  Alphabet vertices_;
  std::vector<Edge> edges_;
  std::optional<Alphabet> labels_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// A closed walk, as a sequence of edge indices.
struct Cycle {
  std::vector<std::size_t> edges;

  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Validates coherence (t(e_i) = s(e_{i+1})) and closure. Throws
// InvalidArgument otherwise.
Cycle make_cycle(const Digraph& g, std::vector<std::size_t> edges);

std::size_t root_vertex(const Digraph& g, const Cycle& c);

// Vertex mode: no source vertex repeats. Edge mode: no edge repeats.
bool is_simple(const Digraph& g, const Cycle& c);

bool is_strongly_connected(const Digraph& g);

// A cycle rooted at v passing through w: the shortest v->w path followed by
// the shortest w->v path (for v == w, the shortest cycle through v). Among
// shortest paths the lexicographically least edge sequence is taken.
// Throws PreconditionError when no such cycle exists.
Cycle connecting_cycle(const Digraph& g, std::size_t v, std::size_t w);

// All simple cycles rooted at vertex `root` (vertex mode) or beginning with
// edge `root` (edge mode), ordered lexicographically by edge indices.
std::vector<Cycle> simple_cycles_rooted(const Digraph& g, Letter root);

// Vertex mode: the traversed vertices with the root repeated at the end.
// Edge mode: the traversed edges with the first edge repeated at the end.
Word word_read(const Digraph& g, const Cycle& c);

// Inverse of word_read(). Throws InvalidArgument when `u` is not the word
// read of a cycle of g.
Cycle cycle_from_word_read(const Digraph& g, const Word& u);

struct Removal {
  Cycle cycle;        // simple subcycle that was cut out
  std::size_t start;  // its first position in the cycle it was cut from
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct Decomposition {
  std::vector<Removal> removed;  // in removal order
  Cycle residual;
};

// Repeatedly cuts out a canonical simple subcycle until the rest is simple.
//
// The cut segment always lies between two occurrences of the same letter
// (vertex mode: the same source vertex; edge mode: the same edge, where the
// word-read copy of the first edge at the end counts as an occurrence). The
// leftmost such repeat is used, so the segment itself is simple. In edge mode
// the segment never starts at position 0, so the first edge survives.
Decomposition cycle_decomposition(const Digraph& g, const Cycle& c);

// Re-inserts the removed cycles in reverse order.
Cycle reassemble(const Decomposition& d);

}  // namespace symdyn
