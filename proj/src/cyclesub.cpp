#include "symdyn/cyclesub.hpp"

#include <algorithm>
#include <string>

#include "symdyn/errors.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

RandomSubstitution vertex_cycle_substitution(const Digraph& g) {
  if (g.mode() != GraphMode::vertex)
    throw InvalidArgument("vertex_cycle_substitution needs a vertex-mode graph");
  return cycle_substitution(g);
}

RandomSubstitution edge_cycle_substitution(const Digraph& g) {
  if (g.mode() != GraphMode::edge)
    throw InvalidArgument("edge_cycle_substitution needs an edge-mode graph");
  return cycle_substitution(g);
}

RandomSubstitution cycle_substitution(const Digraph& g) {
  if (!is_strongly_connected(g))
    throw PreconditionError("cycle-substitutions need a strongly connected graph");
  const Alphabet& letters = g.letters();
  std::vector<WordSet> images(letters.size());
  for (std::size_t a = 0; a < letters.size(); ++a) {
    const Letter x = static_cast<Letter>(a);
    images[a].insert(Word{x});
    for (const Cycle& c : simple_cycles_rooted(g, x)) images[a].insert(word_read(g, c));
  }
  return RandomSubstitution(letters, std::move(images));
}

DerivationWitness derivation_witness(const Digraph& g, const Word& u) {
  const Cycle cycle = cycle_from_word_read(g, u);
  const Decomposition d = cycle_decomposition(g, cycle);
  DerivationWitness w{u.front(), 1 + d.removed.size(), {}, u};
  w.steps.push_back(InsertionStep{0, word_read(g, d.residual)});
  for (auto it = d.removed.rbegin(); it != d.removed.rend(); ++it)
    w.steps.push_back(InsertionStep{it->start, word_read(g, it->cycle)});
  return w;
}

ReplayResult replay_witness(const RandomSubstitution& s, const DerivationWitness& w) {
  if (w.root >= s.size()) throw InvalidArgument("witness root is not a letter of the substitution");
  if (w.depth != w.steps.size())
    throw InvalidArgument("witness depth " + std::to_string(w.depth) + " does not match its " +
                          std::to_string(w.steps.size()) + " steps");
  ReplayResult out{Word{w.root}, {}};
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const InsertionStep& step = w.steps[i];
    const std::string where = "witness step " + std::to_string(i + 1) + ": ";
    const Word& cur = out.word;
    if (step.position >= cur.size())
      throw InvalidArgument(where + "position " + std::to_string(step.position) +
                            " is outside the current word");
    const Letter x = cur[step.position];
    const Word& ins = step.inserted;
    if (ins.empty() || ins.front() != x || ins.back() != x)
      throw InvalidArgument(where + "inserted word does not start and end with the replaced letter");
    if (s.images(x).count(ins) == 0)
      throw InvalidArgument(where + "inserted word is not an image of '" +
                            s.alphabet().symbol(x) + "'");
    for (std::size_t p = 0; p < cur.size(); ++p) {
      if (p != step.position && s.images(cur[p]).count(Word{cur[p]}) == 0)
        throw InvalidArgument(where + "letter '" + s.alphabet().symbol(cur[p]) +
                              "' has no identity realization");
    }
    Word next = cur.substr(0, step.position);
    next.append(ins);
    next.append(cur.substr(step.position + 1));
    out.chain.push_back(next);
    out.word = std::move(next);
  }
  if (out.word != w.target)
    throw InvalidArgument("witness replays to a word different from its target");
  return out;
}

EqualityReport compare_languages(const std::vector<WordSet>& shift, const LanguageTable& sub) {
  const std::size_t n_max = std::min(shift.size(), sub.max_length());
  for (std::size_t n = 1; n <= n_max; ++n) {
    const WordSet& a = shift[n - 1];
    const WordSet& b = sub.words(n);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && *ia < *ib))
        return {false, Divergence{n, *ia, Side::shift}};
      if (ia == a.end() || *ib < *ia) return {false, Divergence{n, *ib, Side::substitution}};
      ++ia;
      ++ib;
    }
  }
  return {true, std::nullopt};
}

EqualityReport verify_language_equality(const Digraph& g, std::size_t max_length,
                                        const Limits& limits) {
  if (max_length == 0) throw InvalidArgument("max_length must be at least 1");
  const Sft x = shift_of(g);
  std::vector<WordSet> shift;
  for (std::size_t n = 1; n <= max_length; ++n) shift.push_back(sft_language(x, n));
  return compare_languages(shift, language_upto(cycle_substitution(g), max_length, limits));
}

std::vector<WordSet> path_label_language(std::size_t vertex_count,
                                         const std::vector<LabelledEdge>& edges,
                                         std::size_t max_length) {
  for (const LabelledEdge& e : edges)
    if (e.source >= vertex_count || e.target >= vertex_count)
      throw InvalidArgument("labelled edge endpoint out of range");
  std::vector<WordSet> out(max_length);
  // Frontier of (vertex, word) pairs, extended one edge at a time.
  std::set<std::pair<std::size_t, Word>> frontier;
  for (std::size_t v = 0; v < vertex_count; ++v) frontier.emplace(v, Word{});
  for (std::size_t n = 1; n <= max_length; ++n) {
    std::set<std::pair<std::size_t, Word>> next;
    for (const auto& [v, w] : frontier) {
      for (const LabelledEdge& e : edges) {
        if (e.source != v) continue;
        Word grown = w;
        grown.push_back(e.label);
        out[n - 1].insert(grown);
        next.emplace(e.target, std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

// Realizations of s(w) no longer than max_length.
void bounded_images(const RandomSubstitution& s, const Word& w, std::size_t max_length,
                    const Limits& limits, WordSet& out) {
  std::vector<Word> current{Word{}};
  for (Letter x : w) {
    std::vector<Word> next;
    for (const Word& prefix : current) {
      for (const Word& r : s.images(x)) {
        if (prefix.size() + r.size() > max_length) continue;
        next.push_back(prefix + r);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > limits.max_set_size)
      throw ResourceCapError("max_set_size", limits.max_set_size);
    current = std::move(next);
  }
  out.insert(current.begin(), current.end());
}

}  // namespace

std::optional<InflationDivergence> first_inadmissible_realization(
    const RandomSubstitution& s, const std::vector<WordSet>& admitted, std::size_t max_length,
    const Limits& limits) {
  if (admitted.size() < max_length)
    throw InvalidArgument("admitted language is shorter than max_length");
  std::vector<WordSet> family;
  for (std::size_t a = 0; a < s.size(); ++a) family.push_back(WordSet{Word{static_cast<Letter>(a)}});
  std::vector<std::vector<WordSet>> history;
  std::optional<InflationDivergence> best;

  for (std::size_t k = 0;; ++k) {
    if (k > limits.max_iterations) throw ResourceCapError("max_iterations", limits.max_iterations);
    if (std::find(history.begin(), history.end(), family) != history.end()) break;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (const Word& w : family[a]) {
        if (admitted[w.size() - 1].count(w)) continue;
        const bool better = !best || w.size() < best->word.size() ||
                            (w.size() == best->word.size() && w < best->word);
        if (better) best = InflationDivergence{w, static_cast<Letter>(a), k};
      }
    }
    history.push_back(family);
    std::vector<WordSet> next(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (const Word& w : family[a]) bounded_images(s, w, max_length, limits, next[a]);
    family = std::move(next);
  }
  return best;
}

}  // namespace symdyn
