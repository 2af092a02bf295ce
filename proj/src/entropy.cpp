#include "symdyn/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdyn/errors.hpp"

namespace symdyn {

// GCC 11 reports a spurious memcpy overflow inside cpp_int's right shift.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif
double log_count(const BigCount& n) {
  if (n <= 0) throw InvalidArgument("log_count needs a positive integer");
  const std::size_t bits = boost::multiprecision::msb(n);
  if (bits < 900) return std::log(n.convert_to<double>());
  const std::size_t drop = bits - 60;
  const BigCount top = n >> drop;
  return std::log(top.convert_to<double>()) + static_cast<double>(drop) * std::log(2.0);
}
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

EntropyEstimate entropy_estimate(const ComplexityProfile& p) {
  if (p.counts.empty()) throw InvalidArgument("entropy_estimate needs a nonempty profile");
  EntropyEstimate e{0.0, {}, p.horizon()};
  for (std::size_t n = 1; n <= p.horizon(); ++n) {
    if (p.at(n) == 0)
      throw InvalidArgument("complexity profile has a zero count at length " + std::to_string(n));
    e.sequence.push_back(log_count(p.at(n)) / static_cast<double>(n));
  }
  e.upper = e.sequence.back();
  return e;
}

Word OneBlockCode::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(letter_map.at(x));
  return Word(std::move(out));
}

namespace {

// All words over `extended` that `code` maps onto w; `lifts[x]` lists the
// extended letters above base letter x.
void preimages(const Word& w, const std::vector<std::vector<Letter>>& lifts, WordSet& out) {
  std::vector<Word> current{Word{}};
  for (Letter x : w) {
    std::vector<Word> next;
    next.reserve(current.size() * lifts[x].size());
    for (const Word& prefix : current) {
      for (Letter y : lifts[x]) {
        Word grown = prefix;
        grown.push_back(y);
        next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  out.insert(current.begin(), current.end());
}

// Alphabet A x {first..first+copies-1} with (a, i) at index a * copies + (i - first).
OneBlockCode indexed_code(const Alphabet& base, std::size_t copies, std::size_t first) {
  std::vector<std::string> names;
  std::vector<Letter> map;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t i = 0; i < copies; ++i) {
      names.push_back(base.symbol(static_cast<Letter>(a)) + ":" + std::to_string(first + i));
      map.push_back(static_cast<Letter>(a));
    }
  }
  return OneBlockCode{Alphabet(std::move(names)), base, std::move(map)};
}

std::vector<std::vector<Letter>> lifts_of(const OneBlockCode& code) {
  std::vector<std::vector<Letter>> lifts(code.base.size());
  for (std::size_t y = 0; y < code.letter_map.size(); ++y)
    lifts[code.letter_map[y]].push_back(static_cast<Letter>(y));
  return lifts;
}

}  // namespace

Extension product_extension(const RandomSubstitution& s, std::size_t m) {
  if (m < 2) throw InvalidArgument("product_extension needs m >= 2");
  if (!is_primitive_sub(s).primitive)
    throw PreconditionError("product_extension needs a primitive substitution");
  OneBlockCode code = indexed_code(s.alphabet(), m, 1);
  const auto lifts = lifts_of(code);
  std::vector<WordSet> images(code.extended.size());
  for (std::size_t y = 0; y < code.extended.size(); ++y)
    for (const Word& w : s.images(code.letter_map[y])) preimages(w, lifts, images[y]);
  return {RandomSubstitution(code.extended, std::move(images)), std::move(code)};
}

RandomSubstitution small_entropy_substitution(std::size_t k) {
  if (k < 2) throw InvalidArgument("small_entropy_substitution needs k >= 2");
  const Letter a = 0;
  const Letter abar = 1;
  const Letter b = 2;
  const Word bk(std::vector<Letter>(k, b));
  Word ba(std::vector<Letter>(k - 1, b));
  Word babar = ba;
  ba.push_back(a);
  babar.push_back(abar);
  return RandomSubstitution(Alphabet({"a", "ā", "b"}),
                            {WordSet{bk}, WordSet{bk}, WordSet{ba, babar}});
}

FractionalConstruction fractional_entropy_substitution(std::size_t l, std::size_t k,
                                                       std::size_t m) {
  if (l < 1 || l > k) throw InvalidArgument("fractional construction needs 1 <= l <= k");
  if (m < 2) throw InvalidArgument("fractional construction needs m >= 2");
  const Alphabet ab = Alphabet::from_chars("ab");
  const Letter a = 0;
  const Letter b = 1;

  std::vector<Word> phi_images(2);
  if (l == 1) {
    phi_images = {Word{b}, Word{a}};
  } else {
    phi_images[0] = Word{a};
    phi_images[1] = Word{b};
    for (std::size_t i = 1; i < l; ++i) {
      phi_images[0].push_back(b);
      phi_images[1].push_back(a);
    }
  }
  const Word tail(std::vector<Letter>(k - l, a));
  DeterministicSubstitution phi(ab, phi_images);
  DeterministicSubstitution psi(ab, {phi_images[0] + tail, phi_images[1] + tail});

  const OneBlockCode code = indexed_code(ab, m, 1);
  const auto lifts = lifts_of(code);
  const Word lifted_tail(std::vector<Letter>(k - l, lifts[a][0]));
  std::vector<WordSet> images(code.extended.size());
  for (std::size_t y = 0; y < code.extended.size(); ++y) {
    WordSet heads;
    preimages(phi_images[code.letter_map[y]], lifts, heads);
    for (const Word& h : heads) images[y].insert(h + lifted_tail);
  }
  RandomSubstitution theta(code.extended, std::move(images));
  if (!is_primitive_sub(theta).primitive)
    throw PreconditionError("fractional construction with l = " + std::to_string(l) +
                            ", k = " + std::to_string(k) + " is not primitive");
  return {std::move(theta), std::move(psi), std::move(phi)};
}

double gap_shift_entropy_bound(std::size_t k, std::size_t K) {
  if (k < 2 || K < k) throw InvalidArgument("gap_shift_entropy_bound needs 2 <= k <= K");
  const double kk = static_cast<double>(K);
  return std::log(kk * kk * static_cast<double>(K - k + 1)) / static_cast<double>(k);
}

EpsilonExtension epsilon_extension(const RandomSubstitution& s, std::size_t n,
                                   const Limits& limits) {
  if (!is_primitive_sub(s).primitive)
    throw PreconditionError("epsilon_extension needs a primitive substitution");
  if (s.is_deterministic())
    throw PreconditionError("epsilon_extension needs a non-deterministic substitution");
  if (!is_min_exponential_growth(s))
    throw PreconditionError("epsilon_extension needs minimum exponential growth");
  if (n == 0) throw PreconditionError("epsilon_extension needs n >= 1; raise n");

  const std::size_t m = s.size();
  std::vector<WordSet> realizations;
  std::size_t longest = 0;
  for (std::size_t a = 0; a < m; ++a) {
    realizations.push_back(realizations_power(s, static_cast<Letter>(a), n, limits));
    for (const Word& w : realizations.back()) longest = std::max(longest, w.size());
  }

  // Distinguished realizations: per letter in alphabet order, the least
  // realization containing every letter that no earlier letter has taken.
  std::vector<Word> chosen;
  std::vector<std::size_t> marked;
  for (std::size_t a = 0; a < m; ++a) {
    const Word* pick = nullptr;
    for (const Word& w : realizations[a]) {
      if (letters_of(w).size() != m) continue;
      if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
      pick = &w;
      break;
    }
    if (!pick)
      throw PreconditionError("no distinguished realization for '" +
                              s.alphabet().symbol(static_cast<Letter>(a)) + "' at n = " +
                              std::to_string(n) + "; raise n");
    chosen.push_back(*pick);
    marked.push_back(static_cast<std::size_t>(
        std::find(pick->begin(), pick->end(), static_cast<Letter>(a)) - pick->begin()));
  }

  OneBlockCode code = indexed_code(s.alphabet(), 2, 0);
  auto lift = [](const Word& w, std::size_t mark) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (std::size_t p = 0; p < w.size(); ++p)
      out.push_back(static_cast<Letter>(2 * w[p] + (p == mark ? 1 : 0)));
    return Word(std::move(out));
  };
  // The marking depends on the word only, so equal realizations of
  // different letters are marked alike.
  auto mark_of = [&](const Word& w) -> std::size_t {
    const auto it = std::find(chosen.begin(), chosen.end(), w);
    return it == chosen.end() ? 0 : marked[static_cast<std::size_t>(it - chosen.begin())];
  };
  const std::size_t unmarked = static_cast<std::size_t>(-1);

  std::vector<WordSet> images(2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    WordSet set;
    for (const Word& w : realizations[a]) {
      set.insert(lift(w, unmarked));
      set.insert(lift(w, mark_of(w)));
    }
    images[2 * a] = set;
    images[2 * a + 1] = std::move(set);
  }
  RandomSubstitution hat(code.extended, std::move(images));
  if (!is_primitive_sub(hat).primitive)
    throw PreconditionError("epsilon extension at n = " + std::to_string(n) +
                            " is not primitive; raise n");
  return {std::move(hat), std::move(code), n, std::move(chosen), std::move(marked), longest};
}

double random_fibonacci_entropy_series(std::size_t terms) {
  if (terms < 2) throw InvalidArgument("the series needs at least 2 terms");
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  double sum = 0.0;
  for (std::size_t i = 2; i <= terms; ++i)
    sum += std::log(static_cast<double>(i)) / std::pow(tau, static_cast<double>(i + 2));
  return sum;
}

}  // namespace symdyn
