#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "symdyn/digraph.hpp"
#include "symdyn/errors.hpp"

using namespace symdyn;

namespace {

std::set<std::string> vertex_words(const Digraph& g, const std::vector<Cycle>& cycles) {
  std::set<std::string> out;
  for (const Cycle& c : cycles) out.insert(g.letters().format(word_read(g, c)));
  return out;
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  const Alphabet v = Alphabet::from_chars("01");
  CHECK_THROWS_AS(Digraph::vertex_graph(v, {{0, 0}, {0, 0}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Digraph::vertex_graph(v, {{0, 2}}), InvalidArgument);
  // Vertex 1 has no outgoing edge.
  CHECK_THROWS_AS(Digraph::vertex_graph(v, {{0, 0}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Digraph::edge_graph(v, {{0, 1}, {1, 0}}, Alphabet::from_chars("a")),
                  InvalidArgument);
  CHECK_NOTHROW(Digraph::vertex_graph(Alphabet::from_chars("x"), {{0, 0}}));
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(fixtures::mickey()));
  CHECK(is_strongly_connected(Digraph::vertex_graph(Alphabet::from_chars("x"), {{0, 0}})));
  const Digraph split =
      Digraph::vertex_graph(Alphabet::from_chars("01"), {{0, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(is_strongly_connected(split));
}

TEST_CASE("connecting cycles") {
  const Digraph g = fixtures::mickey();
  const Cycle c = connecting_cycle(g, 0, 3);
  CHECK(g.letters().format(word_read(g, c)) == "013120");
  CHECK(root_vertex(g, c) == 0);

  const Digraph two = Digraph::vertex_graph(Alphabet::from_chars("01"), {{0, 1}, {1, 0}});
  CHECK(connecting_cycle(two, 0, 1).edges == std::vector<std::size_t>{0, 1});
  CHECK(connecting_cycle(g, 0, 0).size() == 1);
  CHECK_THROWS(connecting_cycle(g, 0, 7));
}

TEST_CASE("simple cycles of the mickey graph") {
  const Digraph g = fixtures::mickey();
  CHECK(vertex_words(g, simple_cycles_rooted(g, 1)) == std::set<std::string>{"1201", "121", "131"});
  CHECK(vertex_words(g, simple_cycles_rooted(g, 0)) == std::set<std::string>{"00", "0120"});
  const Digraph loop = Digraph::vertex_graph(Alphabet::from_chars("v"), {{0, 0}});
  CHECK(vertex_words(loop, simple_cycles_rooted(loop, 0)) == std::set<std::string>{"vv"});
}

TEST_CASE("simple cycles of the edge-mickey graph") {
  const Digraph g = fixtures::edge_mickey();
  const auto cycles = simple_cycles_rooted(g, 0);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].edges == std::vector<std::size_t>{0, 2, 3});
  CHECK(cycles[1].edges == std::vector<std::size_t>{0, 2, 5, 3});
  CHECK(g.letters().format(word_read(g, cycles[0])) == "0230");
}

TEST_CASE("simple cycle enumeration agrees with closed-walk filtering") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Digraph g = trial % 2 == 0 ? oracle::random_strong_vertex_graph(rng, n, 0.35)
                                     : oracle::random_strong_edge_graph(rng, n, n + 1);
    for (std::size_t a = 0; a < g.letters().size(); ++a) {
      std::set<std::vector<std::size_t>> got;
      for (const Cycle& c : simple_cycles_rooted(g, static_cast<Letter>(a))) got.insert(c.edges);
      CHECK(got == oracle::brute_simple_cycles(g, static_cast<Letter>(a)));
    }
  }
}

TEST_CASE("cycle validation and word reads") {
  const Digraph g = fixtures::mickey();
  CHECK_THROWS_AS(make_cycle(g, {0, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_cycle(g, {}), InvalidArgument);
  const Word u = g.letters().parse("0120");
  const Cycle c = cycle_from_word_read(g, u);
  CHECK(word_read(g, c) == u);
  CHECK(is_simple(g, c));
  CHECK_THROWS_AS(cycle_from_word_read(g, g.letters().parse("0130")), InvalidArgument);
  CHECK_THROWS_AS(cycle_from_word_read(g, g.letters().parse("012")), InvalidArgument);
}

TEST_CASE("vertex decomposition follows the leftmost repeat") {
  const Digraph g = fixtures::mickey();
  const Alphabet& L = g.letters();
  const Cycle c = cycle_from_word_read(g, L.parse("213120012"));
  const Decomposition d = cycle_decomposition(g, c);
  REQUIRE(d.removed.size() == 3);
  CHECK(L.format(word_read(g, d.removed[0].cycle)) == "131");
  CHECK(d.removed[0].start == 1);
  CHECK(L.format(word_read(g, d.removed[1].cycle)) == "212");
  CHECK(d.removed[1].start == 0);
  CHECK(L.format(word_read(g, d.removed[2].cycle)) == "00");
  CHECK(d.removed[2].start == 1);
  CHECK(L.format(word_read(g, d.residual)) == "2012");
  CHECK(reassemble(d) == c);

  const Cycle simple = cycle_from_word_read(g, L.parse("0120"));
  const Decomposition none = cycle_decomposition(g, simple);
  CHECK(none.removed.empty());
  CHECK(none.residual == simple);
}

TEST_CASE("edge decomposition keeps the first edge") {
  const Digraph g = fixtures::edge_mickey();
  const Cycle c = make_cycle(g, {0, 2, 3, 1, 2, 5, 3, 4, 5, 3});
  const Decomposition d = cycle_decomposition(g, c);
  REQUIRE(d.removed.size() == 2);
  CHECK(d.removed[0].cycle.edges == std::vector<std::size_t>{2, 3, 1});
  CHECK(d.removed[0].start == 1);
  CHECK(d.removed[1].cycle.edges == std::vector<std::size_t>{5, 3, 4});
  CHECK(d.removed[1].start == 2);
  CHECK(d.residual.edges == std::vector<std::size_t>{0, 2, 5, 3});
  CHECK(reassemble(d) == c);
}
