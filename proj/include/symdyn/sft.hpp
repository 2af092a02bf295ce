#pragma once

// Shifts of finite type presented by 0-1 transition matrices.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symdyn/core.hpp"
#include "symdyn/digraph.hpp"

namespace symdyn {

using BigCount = boost::multiprecision::cpp_int;

// Square 0-1 matrix. Essentiality is not an invariant of this type (the
// letter incidence matrix of a substitution may have a zero row); Sft checks
// it on construction.
class ZeroOneMatrix {
 public:
  // Throws InvalidArgument unless `rows` is a nonempty square array of 0/1.
  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static ZeroOneMatrix zeros(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  bool at(std::size_t i, std::size_t j) const { return bits_.at(i * order_ + j); }
  void set(std::size_t i, std::size_t j, bool value) { bits_.at(i * order_ + j) = value; }

  std::size_t ones() const noexcept;
  bool is_essential() const noexcept;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  explicit ZeroOneMatrix(std::size_t order) : order_(order), bits_(order * order, false) {}

  std::size_t order_ = 0;
  std::vector<bool> bits_;
};

// Block dictionary of a recoded shift: letter i of the recoded alphabet stands
// for blocks[i], a word of length block_length over the original alphabet.
struct Recoding {
  Alphabet original;
  std::vector<Word> blocks;
  std::size_t block_length;
};

class Sft {
 public:
  // Throws InvalidArgument on a size mismatch or a non-essential matrix.
  Sft(Alphabet alphabet, ZeroOneMatrix transition,
      std::optional<Recoding> recoding = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const ZeroOneMatrix& transition() const noexcept { return transition_; }
  const std::optional<Recoding>& recoding() const noexcept { return recoding_; }
  bool allows(Letter a, Letter b) const { return transition_.at(a, b); }

  // The alphabet words are reported in: the original one after recoding.
  const Alphabet& output_alphabet() const noexcept {
    return recoding_ ? recoding_->original : alphabet_;
  }

  // Maps a legal word of this shift to the original alphabet. Without a
  // recoding this is the identity.
  Word decode(const Word& w) const;

 private:
  Alphabet alphabet_;
  ZeroOneMatrix transition_;
  std::optional<Recoding> recoding_;
};

Sft sft_from_matrix(const ZeroOneMatrix& a, const Alphabet& alphabet);

// The shift avoiding `forbidden`, recoded to a 1-step shift on legal
// (L-1)-blocks where L is the longest forbidden length. Single-letter
// forbidden words delete that letter. Only the essential core of the block
// graph is kept. Throws PreconditionError when nothing survives.
Sft higher_block_recode(const Alphabet& alphabet, const WordSet& forbidden);

// Words of length n (over x.alphabet()) all of whose 2-factors are allowed.
WordSet sft_language(const Sft& x, std::size_t n);

// |sft_language(x, n)|, as the entry sum of the (n-1)-th transition power.
BigCount count_words(const Sft& x, std::size_t n);

// Words u of length ell such that uu... is a legal periodic point.
WordSet periodic_words(const Sft& x, std::size_t ell);

struct MatrixClass {
  bool irreducible;
  bool primitive;
  std::optional<std::size_t> witness_power;
};

MatrixClass matrix_classify(const ZeroOneMatrix& a);

// Dominant eigenvalue of an irreducible matrix. Throws PreconditionError on a
// reducible matrix and ConvergenceError when max_iterations is exhausted.
double perron_eigenvalue(const ZeroOneMatrix& a, double tol,
                         std::size_t max_iterations = 1'000'000);

// Binary sequences whose gaps between consecutive 1s lie in [k, K].
Sft gap_shift(std::size_t k, std::size_t K);

// The shift read along a graph: vertex words or edge-label words.
Sft vertex_shift(const Digraph& g);
Sft edge_shift(const Digraph& g);
Sft shift_of(const Digraph& g);

// Language and counts in the original alphabet of a recoded shift.
WordSet original_language(const Sft& x, std::size_t n);
BigCount count_original_words(const Sft& x, std::size_t n);

struct ComplexityProfile {
  std::vector<BigCount> counts;  // counts[i] = p(i + 1)

  std::size_t horizon() const noexcept { return counts.size(); }
  const BigCount& at(std::size_t n) const { return counts.at(n - 1); }
};

ComplexityProfile complexity_profile(const Sft& x, std::size_t max_length);

// p(m + n) <= p(m) p(n) for every m + n within the profile.
bool is_submultiplicative(const ComplexityProfile& p);

}  // namespace symdyn
