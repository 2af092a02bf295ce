#include <doctest.h>

#include "symdyn/core.hpp"
#include "symdyn/errors.hpp"

using namespace symdyn;

namespace {
const Alphabet ab = Alphabet::from_chars("ab");
Word w(const char* text) { return ab.parse(text); }
}  // namespace

TEST_CASE("alphabet rejects empty and duplicate symbol lists") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InvalidArgument);
  CHECK_THROWS_AS(Alphabet::from_chars("aba"), InvalidArgument);
  CHECK_THROWS_AS(Alphabet({"x", ""}), InvalidArgument);
}

TEST_CASE("single-character alphabets format words by concatenation") {
  CHECK(ab.single_char());
  CHECK(ab.format(w("baaab")) == "baaab");
  CHECK(ab.parse("") == Word{});
  CHECK_THROWS_AS(ab.parse("abc"), InvalidArgument);
}

TEST_CASE("multi-character alphabets use commas") {
  const Alphabet big({"a:1", "a:2", "b"});
  CHECK_FALSE(big.single_char());
  const Word x = big.parse("a:2,b,a:1");
  CHECK(x == Word{1, 2, 0});
  CHECK(big.format(x) == "a:2,b,a:1");
  CHECK(big.format(WordSet{Word{0}, Word{2, 2}}) == "{a:1; b,b}");
}

TEST_CASE("utf-8 symbols count as one character") {
  const Alphabet bar = Alphabet::from_chars("aāb");
  CHECK(bar.size() == 3);
  CHECK(bar.single_char());
  CHECK(bar.parse("āb") == Word{1, 2});
  CHECK(bar.format(Word{1, 1}) == "āā");
}

TEST_CASE("is_subword") {
  CHECK(is_subword(ab, w("aaa"), w("baaab")));
  CHECK(is_subword(ab, Word{}, w("ab")));
  CHECK_FALSE(is_subword(ab, w("aba"), w("aabb")));
  CHECK_FALSE(is_subword(ab, w("abab"), w("aba")));
  CHECK_THROWS_AS(is_subword(ab, Word{2}, w("ab")), InvalidArgument);
}

TEST_CASE("cyclic conjugates") {
  CHECK(cyclic_conjugates(w("ab")) == WordSet{w("ab"), w("ba")});
  CHECK(cyclic_conjugates(w("aa")) == WordSet{w("aa")});
  const Alphabet digits = Alphabet::from_chars("0123");
  CHECK(cyclic_conjugates(digits.parse("21312001")).size() == 8);
  CHECK_THROWS_AS(cyclic_conjugates(Word{}), InvalidArgument);
}

TEST_CASE("factors and letters_of") {
  const WordSet f = factors(w("aab"), 2);
  CHECK(f == WordSet{w("a"), w("b"), w("aa"), w("ab")});
  CHECK(letters_of(w("bbab")) == std::vector<Letter>{0, 1});
}

TEST_CASE("substr clamps the length and rejects a start past the end") {
  CHECK(w("abba").substr(2) == w("ba"));
  CHECK(w("abba").substr(1, 100) == w("bba"));
  CHECK(w("abba").substr(4) == Word{});
  CHECK_THROWS_AS(w("ab").substr(3), InvalidArgument);
}

TEST_CASE("word order is lexicographic") {
  CHECK(w("a") < w("aa"));
  CHECK(w("ab") < w("b"));
  CHECK(WordHash{}(w("ab")) == WordHash{}(w("ab")));
}
