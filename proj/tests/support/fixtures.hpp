#pragma once

// Graphs and substitutions shared by the test programs.

#include "symdyn/digraph.hpp"
#include "symdyn/randsub.hpp"

namespace fixtures {

using symdyn::Alphabet;
using symdyn::Digraph;
using symdyn::RandomSubstitution;
using symdyn::WordSet;

// Vertex graph on 0..3 with edges 0->0, 0->1, 1->2, 1->3, 2->0, 2->1, 3->1.
inline Digraph mickey() {
  return Digraph::vertex_graph(Alphabet::from_chars("0123"),
                               {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 1}});
}

inline Digraph golden() {
  return Digraph::vertex_graph(Alphabet::from_chars("01"), {{0, 0}, {0, 1}, {1, 0}});
}

// Edge graph on P, Q, R: 0,1: P->Q, 2: Q->R, 3: R->P, 4: P->R, 5: R->R.
inline Digraph edge_mickey() {
  return Digraph::edge_graph(Alphabet({"P", "Q", "R"}),
                             {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 2}},
                             Alphabet::from_chars("012345"));
}

inline WordSet words(const Alphabet& alphabet, std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* w : list) out.insert(alphabet.parse(w));
  return out;
}

// a -> {ab, ba}, b -> {a}
inline RandomSubstitution random_fibonacci() {
  const Alphabet ab = Alphabet::from_chars("ab");
  return RandomSubstitution(ab, {words(ab, {"ab", "ba"}), words(ab, {"a"})});
}

// The naive substitution read off the sofic presentation with two edges
// labelled 0: 0 -> {0, 0210}, 1 -> {1}, 2 -> {2}, 3 -> {3, 303}.
inline RandomSubstitution sofic_naive() {
  const Alphabet d = Alphabet::from_chars("0123");
  return RandomSubstitution(
      d, {words(d, {"0", "0210"}), words(d, {"1"}), words(d, {"2"}), words(d, {"3", "303"})});
}

}  // namespace fixtures
