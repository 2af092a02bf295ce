#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/errors.hpp"

using namespace symdyn;
using fixtures::words;

namespace {

ComplexityProfile profile_of(std::initializer_list<long long> counts) {
  ComplexityProfile p;
  for (long long c : counts) p.counts.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("entropy estimates of simple profiles") {
  const EntropyEstimate full = entropy_estimate(profile_of({2, 4, 8, 16}));
  CHECK(full.horizon == 4);
  for (double x : full.sequence) CHECK(x == doctest::Approx(std::log(2.0)));
  CHECK(full.upper == doctest::Approx(std::log(2.0)));
  const EntropyEstimate flat = entropy_estimate(profile_of({1, 1, 1}));
  CHECK(flat.upper == 0.0);
  CHECK_THROWS_AS(entropy_estimate(profile_of({2, 0})), InvalidArgument);
  CHECK_THROWS_AS(entropy_estimate(ComplexityProfile{}), InvalidArgument);
}

TEST_CASE("golden mean estimate approaches log of the Perron value") {
  const Sft x = vertex_shift(fixtures::golden());
  const EntropyEstimate e = entropy_estimate(complexity_profile(x, 16));
  const double h = std::log(perron_eigenvalue(x.transition(), 1e-12));
  CHECK(std::abs(e.upper - h) < 0.05);
}

TEST_CASE("log_count handles huge integers") {
  CHECK(log_count(BigCount(1)) == 0.0);
  CHECK(log_count(BigCount(1000)) == doctest::Approx(std::log(1000.0)));
  const BigCount big = BigCount(1) << 5000;
  CHECK(log_count(big) == doctest::Approx(5000 * std::log(2.0)));
}

TEST_CASE("product extension multiplies counts by m^n") {
  const RandomSubstitution base = fixtures::random_fibonacci();
  const LanguageTable t = language_upto(base, 6);
  for (std::size_t m : {2u, 3u}) {
    const Extension e = product_extension(base, m);
    CHECK(e.substitution.size() == 2 * m);
    CHECK(e.code.extended.symbol(1) == "a:2");
    CHECK(e.code.letter_map[m] == 1);
    const LanguageTable hat = language_upto(e.substitution, 6);
    BigCount power = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
      power *= m;
      CHECK(BigCount(hat.words(n).size()) == power * t.words(n).size());
    }
    for (const Word& w : hat.words(4)) CHECK(t.contains(e.code.apply(w)));
  }
  const Alphabet ab = Alphabet::from_chars("ab");
  CHECK_THROWS_AS(product_extension(RandomSubstitution(ab, {words(ab, {"b"}), words(ab, {"a"})}), 2),
                  PreconditionError);
}

TEST_CASE("small entropy substitution") {
  const RandomSubstitution s = small_entropy_substitution(2);
  const Alphabet& A = s.alphabet();
  REQUIRE(A.size() == 3);
  CHECK(s.images(A.index_of("a")) == words(A, {"bb"}));
  CHECK(s.images(A.index_of("ā")) == words(A, {"bb"}));
  CHECK(s.images(A.index_of("b")) == words(A, {"ba", "bā"}));
  for (std::size_t k = 2; k <= 5; ++k) CHECK(is_primitive_sub(small_entropy_substitution(k)).primitive);
  CHECK_THROWS_AS(small_entropy_substitution(1), InvalidArgument);

  // p(n) can exceed 2^{n/k} by a bounded factor only.
  const LanguageTable t = language_upto(s, 16);
  const EntropyEstimate e = entropy_estimate(t.profile());
  CHECK(e.upper < 0.5 * std::log(2.0) + std::log(8.0) / 16);
}

TEST_CASE("fractional entropy construction") {
  const FractionalConstruction f = fractional_entropy_substitution(1, 2, 2);
  const Alphabet ab = Alphabet::from_chars("ab");
  CHECK(f.phi.apply(ab.parse("ab")) == ab.parse("ba"));
  CHECK(f.psi.apply(ab.parse("a")) == ab.parse("ba"));
  CHECK(f.psi.apply(ab.parse("b")) == ab.parse("aa"));
  CHECK(f.substitution.size() == 4);
  for (const WordSet& images : f.substitution.all_images()) {
    CHECK(images.size() == 2);
    for (const Word& w : images) CHECK(w.size() == 2);
  }

  const FractionalConstruction g = fractional_entropy_substitution(3, 4, 2);
  CHECK(g.phi.apply(ab.parse("a")) == ab.parse("abb"));
  CHECK(g.phi.apply(ab.parse("b")) == ab.parse("baa"));
  CHECK(g.psi.apply(ab.parse("b")) == ab.parse("baaa"));
  CHECK(is_primitive_sub(g.substitution).primitive);

  CHECK_THROWS_AS(fractional_entropy_substitution(1, 1, 2), PreconditionError);
  CHECK_THROWS_AS(fractional_entropy_substitution(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(fractional_entropy_substitution(1, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(fractional_entropy_substitution(0, 2, 2), InvalidArgument);
}

TEST_CASE("fractional counts factor through psi at multiples of k") {
  struct Case {
    std::size_t l, k, m, n_max;
  };
  for (const Case c : {Case{1, 2, 2, 6}, Case{1, 3, 2, 5}, Case{2, 3, 2, 5}, Case{1, 2, 3, 6}}) {
    CAPTURE(c.l);
    CAPTURE(c.k);
    CAPTURE(c.m);
    const FractionalConstruction f = fractional_entropy_substitution(c.l, c.k, c.m);
    const std::size_t horizon = c.n_max * c.k;
    const LanguageTable t = language_upto(f.substitution, horizon);
    const LanguageTable psi = language_upto(f.psi.as_random(), horizon);
    auto fibre = [&](std::size_t n) {
      BigCount out = 1;
      for (std::size_t i = 0; i < n * c.l; ++i) out *= c.m;
      return out;
    };
    // A window of one block can straddle a block boundary and see two free
    // letters, so the identity starts at two blocks.
    CHECK(BigCount(t.words(c.k).size()) > fibre(1) * psi.words(c.k).size());
    for (std::size_t n = 2; n <= c.n_max; ++n)
      CHECK(BigCount(t.words(n * c.k).size()) == fibre(n) * psi.words(n * c.k).size());
  }
}

TEST_CASE("gap shift bound") {
  CHECK(gap_shift_entropy_bound(2, 3) == doctest::Approx(0.5 * std::log(18.0)));
  CHECK(gap_shift_entropy_bound(3, 3) == doctest::Approx(std::log(9.0) / 3));
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t K = k; K <= 6; ++K) {
      const EntropyEstimate e = entropy_estimate(complexity_profile(gap_shift(k, K), 16));
      CHECK(e.upper <= gap_shift_entropy_bound(k, K));
    }
  CHECK_THROWS_AS(gap_shift_entropy_bound(3, 2), InvalidArgument);
}

TEST_CASE("epsilon extension of random Fibonacci") {
  const RandomSubstitution base = fixtures::random_fibonacci();
  CHECK_THROWS_AS(epsilon_extension(base, 1), PreconditionError);
  const EpsilonExtension e = epsilon_extension(base, 2);
  CHECK(e.power == 2);
  CHECK(e.max_realization_length == 3);
  const Alphabet& ab = base.alphabet();
  CHECK(e.distinguished[0] == ab.parse("aab"));
  CHECK(e.marked[0] == 0);
  CHECK(e.distinguished[1] == ab.parse("ab"));
  CHECK(e.marked[1] == 1);

  CHECK(is_primitive_sub(e.substitution).primitive);
  CHECK(e.substitution.images(0) == e.substitution.images(1));
  CHECK(e.substitution.images(2) == e.substitution.images(3));
  CHECK(e.code.extended.symbol(1) == "a:1");
  for (std::size_t x = 0; x < e.substitution.size(); ++x) {
    const Letter a = e.code.letter_map[x];
    for (const Word& w : e.substitution.images(static_cast<Letter>(x)))
      CHECK(is_realization(base, a, 2, e.code.apply(w)));
  }

  const RandomSubstitution fib(ab, {words(ab, {"ab"}), words(ab, {"a"})});
  CHECK_THROWS_AS(epsilon_extension(fib, 3), PreconditionError);
}

TEST_CASE("random Fibonacci entropy series") {
  CHECK(random_fibonacci_entropy_series(60) == doctest::Approx(0.444399).epsilon(1e-5));
  const double tau = (1 + std::sqrt(5.0)) / 2;
  CHECK(random_fibonacci_entropy_series(2) == doctest::Approx(std::log(2.0) / std::pow(tau, 4)));
  double prev = 0;
  for (std::size_t t = 2; t <= 40; ++t) {
    const double v = random_fibonacci_entropy_series(t);
    CHECK(v > prev);
    prev = v;
  }
}
