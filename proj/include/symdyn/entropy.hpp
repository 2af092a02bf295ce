#pragma once

// Finite-horizon entropy estimates and substitution constructions that move
// entropy in controlled ways.

#include <cstddef>
#include <vector>

#include "symdyn/core.hpp"
#include "symdyn/randsub.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

struct EntropyEstimate {
  double upper;                   // log p(N) / N at the horizon
  std::vector<double> sequence;   // log p(n) / n for n = 1..N
  std::size_t horizon;
};

// Throws InvalidArgument on an empty profile or a zero count.
EntropyEstimate entropy_estimate(const ComplexityProfile& p);

// Natural logarithm of a positive integer of any size.
double log_count(const BigCount& n);

// Letter-to-letter projection from an extended alphabet onto a base one.
struct OneBlockCode {
  Alphabet extended;
  Alphabet base;
  std::vector<Letter> letter_map;  // indexed by extended letter

  Word apply(const Word& w) const;
};

struct Extension {
  RandomSubstitution substitution;
  OneBlockCode code;
};

// (a, i) -> every preimage under (a, i) -> a of every image of a, on the
// alphabet A x {1..m}. Extended letter (a, i) has index a * m + (i - 1) and
// is named "a:i". Throws PreconditionError for non-primitive s.
Extension product_extension(const RandomSubstitution& s, std::size_t m);

// a -> {b^k}, ā -> {b^k}, b -> {b^(k-1) a, b^(k-1) ā}.
RandomSubstitution small_entropy_substitution(std::size_t k);

struct FractionalConstruction {
  RandomSubstitution substitution;  // constant length k on {a,b} x {1..m}
  DeterministicSubstitution psi;    // x -> phi(x) a^(k - l) on {a,b}
  DeterministicSubstitution phi;    // constant length l on {a,b}
};

// Entropy (l / k) log m. phi is the swap for l = 1 and a -> a b^(l-1),
// b -> b a^(l-1) otherwise. Throws InvalidArgument unless 1 <= l <= k and
// m >= 2, and PreconditionError when the result is not primitive (l = k = 1).
FractionalConstruction fractional_entropy_substitution(std::size_t l, std::size_t k,
                                                       std::size_t m);

// (1/k) log(K^2 (K - k + 1)).
double gap_shift_entropy_bound(std::size_t k, std::size_t K);

struct EpsilonExtension {
  RandomSubstitution substitution;  // on A x {0,1}, (a, i) at index 2a + i, named "a:i"
  OneBlockCode code;
  std::size_t power;                   // n
  std::vector<Word> distinguished;     // the chosen realization per letter
  std::vector<std::size_t> marked;     // marked position per letter
  std::size_t max_realization_length;  // K_n
};

// Two-copy extension of s^n in which one position of every realization may
// carry index 1. Throws PreconditionError when s is not primitive, is
// deterministic, lacks minimum exponential growth, or when n is too small
// for the distinguished realizations to exist.
EpsilonExtension epsilon_extension(const RandomSubstitution& s, std::size_t n,
                                   const Limits& limits = {});

// sum_{i=2}^{terms} log(i) / tau^(i+2), tau the golden ratio.
double random_fibonacci_entropy_series(std::size_t terms);

}  // namespace symdyn
