#include "symdyn/randsub.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "symdyn/errors.hpp"

namespace symdyn {

RandomSubstitution::RandomSubstitution(Alphabet alphabet, std::vector<WordSet> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw InvalidArgument("substitution needs exactly one image set per letter");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    const std::string& name = alphabet_.symbol(static_cast<Letter>(a));
    if (images_[a].empty()) throw InvalidArgument("image set of '" + name + "' is empty");
    for (const Word& w : images_[a]) {
      if (w.empty()) throw InvalidArgument("image of '" + name + "' contains the empty word");
      if (!alphabet_.admits(w))
        throw InvalidArgument("image of '" + name + "' uses a letter outside the alphabet");
    }
  }
}

bool RandomSubstitution::is_deterministic() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [](const WordSet& s) { return s.size() == 1; });
}

std::size_t RandomSubstitution::max_image_length() const noexcept {
  std::size_t out = 0;
  for (const WordSet& set : images_)
    for (const Word& w : set) out = std::max(out, w.size());
  return out;
}

DeterministicSubstitution::DeterministicSubstitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw InvalidArgument("substitution needs exactly one image per letter");
  for (const Word& w : images_) {
    if (w.empty()) throw InvalidArgument("deterministic image is empty");
    if (!alphabet_.admits(w)) throw InvalidArgument("image uses a letter outside the alphabet");
  }
}

Word DeterministicSubstitution::apply(const Word& u) const {
  Word out;
  for (Letter x : u) out.append(images_.at(x));
  return out;
}

RandomSubstitution DeterministicSubstitution::as_random() const {
  std::vector<WordSet> sets;
  for (const Word& w : images_) sets.push_back(WordSet{w});
  return RandomSubstitution(alphabet_, std::move(sets));
}

WordSet apply_random(const RandomSubstitution& s, const Word& u, const Limits& limits) {
  if (u.empty()) throw InvalidArgument("apply_random needs a nonempty word");
  if (!s.alphabet().admits(u)) throw InvalidArgument("word is not over the substitution alphabet");
  WordSet current{Word{}};
  for (Letter x : u) {
    WordSet next;
    for (const Word& prefix : current) {
      for (const Word& r : s.images(x)) {
        next.insert(prefix + r);
        if (next.size() > limits.max_set_size)
          throw ResourceCapError("max_set_size", limits.max_set_size);
      }
    }
    current = std::move(next);
  }
  return current;
}

WordSet realizations_power(const RandomSubstitution& s, Letter a, std::size_t k,
                           const Limits& limits) {
  if (a >= s.size()) throw InvalidArgument("letter out of range");
  WordSet current{Word{a}};
  for (std::size_t step = 0; step < k; ++step) {
    WordSet next;
    for (const Word& w : current) {
      for (const Word& v : apply_random(s, w, limits)) {
        next.insert(v);
        if (next.size() > limits.max_set_size)
          throw ResourceCapError("max_set_size", limits.max_set_size);
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

class RealizationOracle {
 public:
  RealizationOracle(const RandomSubstitution& s, const Word& w) : s_(s), w_(w) {}

  // Is w[lo, hi) a realization of s^k(a)?
  bool letter(Letter a, std::size_t k, std::size_t lo, std::size_t hi) {
    if (k == 0) return hi == lo + 1 && w_[lo] == a;
    const auto key = std::make_tuple(a, k, lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    for (const Word& r : s_.images(a)) {
      if (r.size() > hi - lo) continue;
      if (word(r, 0, k - 1, lo, hi)) {
        found = true;
        break;
      }
    }
    memo_[key] = found;
    return found;
  }

 private:
  // Is w[lo, hi) a realization of s^k(r[i..])?
  bool word(const Word& r, std::size_t i, std::size_t k, std::size_t lo, std::size_t hi) {
    if (i == r.size()) return lo == hi;
    const std::size_t rest = r.size() - i - 1;  // each later letter needs >= 1 position
    for (std::size_t mid = lo + 1; mid + rest <= hi; ++mid)
      if (letter(r[i], k, lo, mid) && word(r, i + 1, k, mid, hi)) return true;
    return false;
  }

  const RandomSubstitution& s_;
  const Word& w_;
  std::map<std::tuple<Letter, std::size_t, std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

bool is_realization(const RandomSubstitution& s, Letter a, std::size_t k, const Word& w) {
  if (a >= s.size()) throw InvalidArgument("letter out of range");
  if (w.empty() || !s.alphabet().admits(w)) return false;
  RealizationOracle oracle(s, w);
  return oracle.letter(a, k, 0, w.size());
}

ZeroOneMatrix letter_incidence_matrix(const RandomSubstitution& s) {
  ZeroOneMatrix m = ZeroOneMatrix::zeros(s.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    for (const Word& w : s.images(static_cast<Letter>(j)))
      for (Letter i : w) m.set(i, j, true);
  return m;
}

PrimitivityResult is_primitive_sub(const RandomSubstitution& s) {
  const MatrixClass cls = matrix_classify(letter_incidence_matrix(s));
  return {cls.primitive, cls.witness_power};
}

bool is_empty_subshift(const RandomSubstitution& s) {
  if (!is_primitive_sub(s).primitive)
    throw PreconditionError("the emptiness criterion applies to primitive substitutions only");
  return s.max_image_length() == 1;
}

LanguageTable::LanguageTable(std::vector<WordSet> by_length, SaturationCertificate certificate)
    : by_length_(std::move(by_length)), certificate_(certificate) {}

bool LanguageTable::contains(const Word& u) const {
  if (u.empty() || u.size() > by_length_.size()) return false;
  return by_length_[u.size() - 1].count(u) > 0;
}

ComplexityProfile LanguageTable::profile() const {
  ComplexityProfile p;
  for (const WordSet& set : by_length_) p.counts.emplace_back(set.size());
  return p;
}

RealizationChoice deterministic_realization(const RandomSubstitution& s, std::size_t k,
                                            const std::vector<Word>& selector) {
  if (selector.size() != s.size())
    throw InvalidArgument("selector needs one word per letter");
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!is_realization(s, static_cast<Letter>(a), k, selector[a]))
      throw InvalidArgument("selected word for '" + s.alphabet().symbol(static_cast<Letter>(a)) +
                            "' is not a realization of the " + std::to_string(k) +
                            "-th power");
  }
  DeterministicSubstitution phi(s.alphabet(), selector);
  const bool primitive = is_primitive_sub(phi.as_random()).primitive;
  return {std::move(phi), primitive};
}

bool is_min_exponential_growth(const RandomSubstitution& s) {
  // chain[a]: a has a length-1 realization chain of the current depth.
  const std::size_t m = s.size();
  std::vector<bool> chain(m, true);
  for (std::size_t depth = 0; depth < m; ++depth) {
    std::vector<bool> next(m, false);
    for (std::size_t a = 0; a < m; ++a)
      for (const Word& w : s.images(static_cast<Letter>(a)))
        if (w.size() == 1 && chain[w[0]]) next[a] = true;
    chain = std::move(next);
  }
  return std::none_of(chain.begin(), chain.end(), [](bool b) { return b; });
}

RandomSubstitution power_substitution(const RandomSubstitution& s, std::size_t k,
                                      const Limits& limits) {
  std::vector<WordSet> images;
  for (std::size_t a = 0; a < s.size(); ++a)
    images.push_back(realizations_power(s, static_cast<Letter>(a), k, limits));
  return RandomSubstitution(s.alphabet(), std::move(images));
}

}  // namespace symdyn
