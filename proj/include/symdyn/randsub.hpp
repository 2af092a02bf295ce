#pragma once

// Random substitutions: realizations, primitivity and exact legal languages.

#include <cstddef>
#include <optional>
#include <vector>

#include "symdyn/core.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

// Caps that turn combinatorial blow-up into a ResourceCapError.
struct Limits {
  std::size_t max_set_size = std::size_t{1} << 24;
  std::size_t max_iterations = 4096;
};

class RandomSubstitution {
 public:
  // images[a] is the set of candidate images of letter a. Throws
  // InvalidArgument on an empty set, an empty word, or a foreign letter.
  RandomSubstitution(Alphabet alphabet, std::vector<WordSet> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  const WordSet& images(Letter a) const { return images_.at(a); }
  const std::vector<WordSet>& all_images() const noexcept { return images_; }

  bool is_deterministic() const noexcept;
  std::size_t max_image_length() const noexcept;

  friend bool operator==(const RandomSubstitution& a, const RandomSubstitution& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<WordSet> images_;
};

class DeterministicSubstitution {
 public:
  DeterministicSubstitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& all_images() const noexcept { return images_; }

  Word apply(const Word& u) const;
  RandomSubstitution as_random() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// All concatenations choosing one image per letter of u.
WordSet apply_random(const RandomSubstitution& s, const Word& u, const Limits& limits = {});

// All realizations of s^k(a); k = 0 gives {a}.
WordSet realizations_power(const RandomSubstitution& s, Letter a, std::size_t k,
                           const Limits& limits = {});

// Whether w is a realization of s^k(a), decided without enumerating the
// realization set.
bool is_realization(const RandomSubstitution& s, Letter a, std::size_t k, const Word& w);

// B[i][j] = 1 iff letter i occurs in some image of letter j.
ZeroOneMatrix letter_incidence_matrix(const RandomSubstitution& s);

struct PrimitivityResult {
  bool primitive;
  std::optional<std::size_t> witness_k;
};

PrimitivityResult is_primitive_sub(const RandomSubstitution& s);

// For primitive s: the subshift is empty iff every image has length 1.
// Throws PreconditionError for non-primitive input.
bool is_empty_subshift(const RandomSubstitution& s);

// The window-set iteration W_k(a) is eventually periodic; the certificate
// records where the family of all letters first repeats.
struct SaturationCertificate {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const SaturationCertificate&, const SaturationCertificate&) = default;
};

class LanguageTable {
 public:
  LanguageTable(std::vector<WordSet> by_length, SaturationCertificate certificate);

  std::size_t max_length() const noexcept { return by_length_.size(); }
  const WordSet& words(std::size_t n) const { return by_length_.at(n - 1); }
  const std::vector<WordSet>& by_length() const noexcept { return by_length_; }
  const SaturationCertificate& certificate() const noexcept { return certificate_; }

  bool contains(const Word& u) const;
  ComplexityProfile profile() const;

 private:
  std::vector<WordSet> by_length_;
  SaturationCertificate certificate_;
};

// Exact legal words of every length up to max_length.
LanguageTable language_upto(const RandomSubstitution& s, std::size_t max_length,
                            const Limits& limits = {});

struct LegalityWitness {
  Letter letter;
  std::size_t power;
  friend bool operator==(const LegalityWitness&, const LegalityWitness&) = default;
};

struct LegalityResult {
  bool legal;
  // The first (power, letter) pair in iteration order with u inside a
  // realization of s^power(letter).
  std::optional<LegalityWitness> witness;
};

LegalityResult is_legal(const RandomSubstitution& s, const Word& u, const Limits& limits = {});

struct RealizationChoice {
  DeterministicSubstitution substitution;
  bool primitive;
};

// The deterministic substitution a -> selector[a]; each selector[a] must be
// a realization of s^k(a).
RealizationChoice deterministic_realization(const RandomSubstitution& s, std::size_t k,
                                            const std::vector<Word>& selector);

// Every realization of s^m(a) has length >= 2, where m is the alphabet size.
bool is_min_exponential_growth(const RandomSubstitution& s);

// s^k as a random substitution in its own right.
RandomSubstitution power_substitution(const RandomSubstitution& s, std::size_t k,
                                      const Limits& limits = {});

}  // namespace symdyn
