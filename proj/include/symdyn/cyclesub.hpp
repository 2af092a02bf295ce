#pragma once

// Cycle-substitutions of strongly connected graphs, derivation witnesses,
// and comparison of substitution languages with shift languages.

#include <cstddef>
#include <optional>
#include <vector>

#include "symdyn/core.hpp"
#include "symdyn/digraph.hpp"
#include "symdyn/randsub.hpp"

namespace symdyn {

// a -> {a} together with the word reads of the simple cycles rooted at a.
// Throws PreconditionError when g is not strongly connected.
RandomSubstitution vertex_cycle_substitution(const Digraph& g);
RandomSubstitution edge_cycle_substitution(const Digraph& g);
RandomSubstitution cycle_substitution(const Digraph& g);

// Replaces the letter at `position` by `inserted`, an image word that starts
// and ends with that letter.
struct InsertionStep {
  std::size_t position;
  Word inserted;
  friend bool operator==(const InsertionStep&, const InsertionStep&) = default;
};

// Replayed from the single-letter word `root`: each step is one application
// of the substitution, realizing every letter but the one at `position` by
// itself.
struct DerivationWitness {
  Letter root;
  std::size_t depth;
  std::vector<InsertionStep> steps;
  Word target;
};

// Witness that the cycle word read u is a realization of s^k(u[0]).
// Throws InvalidArgument when u is not the word read of a cycle of g.
DerivationWitness derivation_witness(const Digraph& g, const Word& u);

struct ReplayResult {
  Word word;
  std::vector<Word> chain;  // chain[i] = word after step i + 1
};

// Performs the insertions, checking every step against s. Throws
// InvalidArgument naming the first inconsistent step, or when the result
// differs from the witness target.
ReplayResult replay_witness(const RandomSubstitution& s, const DerivationWitness& w);

enum class Side { shift, substitution };

struct Divergence {
  std::size_t length;
  Word word;
  Side side;  // the side the word belongs to
};

struct EqualityReport {
  bool equal;
  std::optional<Divergence> first_divergence;
};

// Shortest, then lexicographically least, word in exactly one of the two
// languages. shift[n - 1] holds the shift words of length n.
EqualityReport compare_languages(const std::vector<WordSet>& shift, const LanguageTable& sub);

// Compares the graph's shift with its cycle-substitution up to max_length.
EqualityReport verify_language_equality(const Digraph& g, std::size_t max_length,
                                        const Limits& limits = {});

struct LabelledEdge {
  std::size_t source;
  std::size_t target;
  Letter label;
};

// Label sequences of paths in a graph whose labels may repeat (a sofic
// presentation); result[n - 1] holds the words of length n.
std::vector<WordSet> path_label_language(std::size_t vertex_count,
                                         const std::vector<LabelledEdge>& edges,
                                         std::size_t max_length);

struct InflationDivergence {
  Word word;
  Letter letter;
  std::size_t power;
};

// Shortest, then lexicographically least, realization of some s^k(a) with
// length <= max_length that is not in `admitted` (indexed like
// path_label_language). The first matching (power, letter) is reported.
std::optional<InflationDivergence> first_inadmissible_realization(
    const RandomSubstitution& s, const std::vector<WordSet>& admitted, std::size_t max_length,
    const Limits& limits = {});

}  // namespace symdyn
