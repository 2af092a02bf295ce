#pragma once

// Alphabets, finite words and word sets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symdyn {

using Letter = std::uint16_t;

// A finite sequence of letter indices. Words carry no alphabet; the
// operations that can mix alphabets take the alphabet explicitly.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(const_iterator first, const_iterator last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> view() const noexcept { return letters_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  void push_back(Letter x) { letters_.push_back(x); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
  }
  void append(std::span<const Letter> w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
  }
  void truncate(std::size_t len) {
    if (letters_.size() > len) letters_.resize(len);
  }
  void reserve(std::size_t n) { letters_.reserve(n); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Deduplicated, lexicographically ordered set of words.
using WordSet = std::set<Word>;

class Alphabet {
 public:
  // Throws InvalidArgument on an empty list or duplicate symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  // One symbol per UTF-8 code point, in order of appearance.
  static Alphabet from_chars(std::string_view chars);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(Letter x) const;
  std::optional<Letter> find(std::string_view name) const;
  // Throws InvalidArgument when `name` is not a symbol.
  Letter index_of(std::string_view name) const;

  // True when every symbol is a single code point.
  bool single_char() const noexcept { return single_char_; }

  // True when every letter of `w` indexes into this alphabet.
  bool admits(const Word& w) const noexcept;

  // Concatenated symbols for single-character alphabets, otherwise
  // comma-separated.
  std::string format(const Word& w) const;
  std::string format(const WordSet& set) const;

  // Inverse of format(). Throws InvalidArgument on unknown symbols.
  Word parse(std::string_view text) const;
  Word parse_symbols(const std::vector<std::string>& names) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
  bool single_char_ = true;
};

// Splits a UTF-8 string into code points.
std::vector<std::string> split_code_points(std::string_view text);

// v occurs contiguously in u. The empty word occurs in every word.
bool occurs_in(const Word& v, const Word& u);

// Same as occurs_in(), after checking that both words are over `alphabet`.
// Throws InvalidArgument on a letter outside the alphabet.
bool is_subword(const Alphabet& alphabet, const Word& v, const Word& u);

// All rotations of a nonempty word.
WordSet cyclic_conjugates(const Word& u);

// All nonempty factors of u of length at most max_len.
WordSet factors(const Word& u, std::size_t max_len);

// Sorted distinct letters occurring in u.
std::vector<Letter> letters_of(const Word& u);

}  // namespace symdyn
