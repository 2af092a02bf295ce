#include "symdyn/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "symdyn/errors.hpp"

namespace symdyn {

Digraph::Digraph(GraphMode mode, Alphabet vertices, std::vector<Edge> edges,
                 std::optional<Alphabet> labels)
    : mode_(mode),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      out_(vertices_.size()),
      in_(vertices_.size()) {
  const std::size_t n = vertices_.size();
  if (edges_.size() > 0xFFFF) throw InvalidArgument("too many edges");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.source >= n || ed.target >= n)
      throw InvalidArgument("edge " + std::to_string(e) +
                            " has an endpoint outside the vertex set");
    out_[ed.source].push_back(e);
    in_[ed.target].push_back(e);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out_[v].empty() || in_[v].empty())
      throw InvalidArgument("graph is not essential: vertex '" +
                            vertices_.symbol(static_cast<Letter>(v)) +
                            "' lacks an incoming or outgoing edge");
  }
}

Digraph Digraph::vertex_graph(Alphabet vertices, std::vector<Edge> edges) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges) {
    if (!seen.emplace(e.source, e.target).second)
      throw InvalidArgument("duplicate edge " + std::to_string(e.source) +
                            "->" + std::to_string(e.target) +
                            " in a vertex-shift graph");
  }
  return Digraph(GraphMode::vertex, std::move(vertices), std::move(edges),
                 std::nullopt);
}

Digraph Digraph::edge_graph(Alphabet vertices, std::vector<Edge> edges,
                            Alphabet labels) {
  if (labels.size() != edges.size())
    throw InvalidArgument("edge-shift graph needs exactly one label per edge");
  return Digraph(GraphMode::edge, std::move(vertices), std::move(edges),
                 std::move(labels));
}

std::optional<std::size_t> Digraph::find_edge(std::size_t s, std::size_t t) const {
  for (std::size_t e : out_.at(s))
    if (edges_[e].target == t) return e;
  return std::nullopt;
}

Cycle make_cycle(const Digraph& g, std::vector<std::size_t> edges) {
  if (edges.empty()) throw InvalidArgument("a cycle needs at least one edge");
  for (std::size_t e : edges)
    if (e >= g.edges().size()) throw InvalidArgument("cycle edge index out of range");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t next = edges[(i + 1) % edges.size()];
    if (g.edge(edges[i]).target != g.edge(next).source)
      throw InvalidArgument("edge sequence is not a closed walk (break after position " +
                            std::to_string(i) + ")");
  }
  return Cycle{std::move(edges)};
}

std::size_t root_vertex(const Digraph& g, const Cycle& c) {
  return g.edge(c.edges.front()).source;
}

bool is_simple(const Digraph& g, const Cycle& c) {
  std::vector<std::size_t> keys;
  keys.reserve(c.size());
  for (std::size_t e : c.edges)
    keys.push_back(g.mode() == GraphMode::vertex ? g.edge(e).source : e);
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Distances to `t` along edges (reverse BFS).
std::vector<std::size_t> distances_to(const Digraph& g, std::size_t t) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{t};
  dist[t] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : g.in_edges(x)) {
      const std::size_t y = g.edge(e).source;
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Lexicographically least shortest nonempty path from s to t.
std::vector<std::size_t> shortest_path(const Digraph& g, std::size_t s, std::size_t t) {
  const auto dist = distances_to(g, t);
  std::vector<std::size_t> path;
  // The first step is chosen separately so that s == t yields a cycle.
  std::size_t best = kUnreached;
  std::size_t first = kUnreached;
  for (std::size_t e : g.out_edges(s)) {
    const std::size_t d = dist[g.edge(e).target];
    if (d != kUnreached && d + 1 < best) {
      best = d + 1;
      first = e;
    }
  }
  if (first == kUnreached)
    throw PreconditionError("no path between the requested vertices");
  path.push_back(first);
  std::size_t x = g.edge(first).target;
  while (x != t) {
    for (std::size_t e : g.out_edges(x)) {
      if (dist[g.edge(e).target] + 1 == dist[x]) {
        path.push_back(e);
        x = g.edge(e).target;
        break;
      }
    }
  }
  return path;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  const auto back = distances_to(g, 0);
  if (std::find(back.begin(), back.end(), kUnreached) != back.end()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_edges(x)) {
      const std::size_t y = g.edge(e).target;
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == g.vertex_count();
}

Cycle connecting_cycle(const Digraph& g, std::size_t v, std::size_t w) {
  if (v >= g.vertex_count() || w >= g.vertex_count())
    throw InvalidArgument("connecting_cycle: vertex out of range");
  if (v == w) return make_cycle(g, shortest_path(g, v, v));
  auto there = shortest_path(g, v, w);
  const auto back = shortest_path(g, w, v);
  there.insert(there.end(), back.begin(), back.end());
  return make_cycle(g, std::move(there));
}

namespace {

class SimpleCycleSearch {
 public:
  SimpleCycleSearch(const Digraph& g, std::vector<Cycle>& out)
      : g_(g), out_(out), used_(g.mode() == GraphMode::vertex ? g.vertex_count()
                                                              : g.edges().size(),
                                false) {}

  void from_vertex(std::size_t root) {
    root_ = root;
    used_[root] = true;
    vertex_step(root);
  }

  void from_edge(std::size_t first) {
    root_ = g_.edge(first).source;
    used_[first] = true;
    path_.push_back(first);
    edge_step(g_.edge(first).target);
  }

 private:
  void vertex_step(std::size_t x) {
    for (std::size_t e : g_.out_edges(x)) {
      const std::size_t y = g_.edge(e).target;
      path_.push_back(e);
      if (y == root_) {
        out_.push_back(Cycle{path_});
      } else if (!used_[y]) {
        used_[y] = true;
        vertex_step(y);
        used_[y] = false;
      }
      path_.pop_back();
    }
  }

  void edge_step(std::size_t x) {
    if (x == root_) out_.push_back(Cycle{path_});
    for (std::size_t e : g_.out_edges(x)) {
      if (used_[e]) continue;
      used_[e] = true;
      path_.push_back(e);
      edge_step(g_.edge(e).target);
      path_.pop_back();
      used_[e] = false;
    }
  }

  const Digraph& g_;
  std::vector<Cycle>& out_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_;
  std::size_t root_ = 0;
};

}  // namespace

std::vector<Cycle> simple_cycles_rooted(const Digraph& g, Letter root) {
  std::vector<Cycle> out;
  SimpleCycleSearch search(g, out);
  if (g.mode() == GraphMode::vertex) {
    if (root >= g.vertex_count()) throw InvalidArgument("unknown root vertex");
    search.from_vertex(root);
  } else {
    if (root >= g.edges().size()) throw InvalidArgument("unknown root edge");
    search.from_edge(root);
  }
  return out;
}

Word word_read(const Digraph& g, const Cycle& c) {
  std::vector<Letter> letters;
  letters.reserve(c.size() + 1);
  for (std::size_t e : c.edges) {
    letters.push_back(static_cast<Letter>(g.mode() == GraphMode::vertex ? g.edge(e).source
                                                                        : e));
  }
  letters.push_back(letters.front());
  return Word(std::move(letters));
}

Cycle cycle_from_word_read(const Digraph& g, const Word& u) {
  if (u.size() < 2 || u.front() != u.back())
    throw InvalidArgument("not a cycle word read: needs length >= 2 and equal end letters");
  if (!g.letters().admits(u)) throw InvalidArgument("word is not over the graph's alphabet");
  std::vector<std::size_t> edges;
  edges.reserve(u.size() - 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (g.mode() == GraphMode::vertex) {
      const auto e = g.find_edge(u[i], u[i + 1]);
      if (!e)
        throw InvalidArgument("not a cycle word read: no edge " + g.letters().symbol(u[i]) +
                              "->" + g.letters().symbol(u[i + 1]));
      edges.push_back(*e);
    } else {
      edges.push_back(u[i]);
    }
  }
  return make_cycle(g, std::move(edges));
}

namespace {

struct Cut {
  std::size_t start;
  std::size_t end;  // exclusive
};

std::optional<Cut> canonical_cut(const Digraph& g, const std::vector<std::size_t>& edges) {
  if (g.mode() == GraphMode::vertex) {
    std::vector<std::size_t> first_seen(g.vertex_count(), kUnreached);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const std::size_t v = g.edge(edges[j]).source;
      if (first_seen[v] != kUnreached) return Cut{first_seen[v], j};
      first_seen[v] = j;
    }
    return std::nullopt;
  }
  // Positions 1..len of the word read; position len is the copy of edge 0.
  std::vector<std::size_t> first_seen(g.edges().size(), kUnreached);
  for (std::size_t j = 1; j <= edges.size(); ++j) {
    const std::size_t e = j < edges.size() ? edges[j] : edges[0];
    if (first_seen[e] != kUnreached) return Cut{first_seen[e], j};
    first_seen[e] = j;
  }
  return std::nullopt;
}

}  // namespace

Decomposition cycle_decomposition(const Digraph& g, const Cycle& c) {
  Decomposition d;
  std::vector<std::size_t> current = c.edges;
  while (auto cut = canonical_cut(g, current)) {
    const auto first = current.begin() + static_cast<std::ptrdiff_t>(cut->start);
    const auto last = current.begin() + static_cast<std::ptrdiff_t>(cut->end);
    d.removed.push_back(Removal{Cycle{std::vector<std::size_t>(first, last)}, cut->start});
    current.erase(first, last);
  }
  d.residual = Cycle{std::move(current)};
  return d;
}

Cycle reassemble(const Decomposition& d) {
  std::vector<std::size_t> edges = d.residual.edges;
  for (auto it = d.removed.rbegin(); it != d.removed.rend(); ++it) {
    if (it->start > edges.size()) throw InvalidArgument("removal position out of range");
    edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(it->start),
                 it->cycle.edges.begin(), it->cycle.edges.end());
  }
  return Cycle{std::move(edges)};
}

}  // namespace symdyn
