#include "symdyn/sft.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symdyn/errors.hpp"

namespace symdyn {

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix must have at least one row");
  ZeroOneMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InvalidArgument("matrix is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1)
        throw InvalidArgument("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not 0 or 1");
      m.set(i, j, v == 1);
    }
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::zeros(std::size_t order) {
  if (order == 0) throw InvalidArgument("matrix order must be positive");
  return ZeroOneMatrix(order);
}

std::size_t ZeroOneMatrix::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool ZeroOneMatrix::is_essential() const noexcept {
  for (std::size_t i = 0; i < order_; ++i) {
    bool row = false;
    bool col = false;
    for (std::size_t j = 0; j < order_; ++j) {
      row = row || bits_[i * order_ + j];
      col = col || bits_[j * order_ + i];
    }
    if (!row || !col) return false;
  }
  return true;
}

std::vector<std::vector<int>> ZeroOneMatrix::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_, 0));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = at(i, j) ? 1 : 0;
  return out;
}

Sft::Sft(Alphabet alphabet, ZeroOneMatrix transition, std::optional<Recoding> recoding)
    : alphabet_(std::move(alphabet)),
      transition_(std::move(transition)),
      recoding_(std::move(recoding)) {
  if (alphabet_.size() != transition_.order())
    throw InvalidArgument("alphabet size " + std::to_string(alphabet_.size()) +
                          " does not match matrix order " +
                          std::to_string(transition_.order()));
  if (!transition_.is_essential())
    throw InvalidArgument("transition matrix is not essential (zero row or column)");
  if (recoding_) {
    if (recoding_->blocks.size() != alphabet_.size())
      throw InvalidArgument("recoding needs one block per letter");
    WordSet distinct(recoding_->blocks.begin(), recoding_->blocks.end());
    if (distinct.size() != recoding_->blocks.size())
      throw InvalidArgument("recoding blocks are not pairwise distinct");
  }
}

Word Sft::decode(const Word& w) const {
  if (!recoding_ || w.empty()) return w;
  Word out = recoding_->blocks.at(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(recoding_->blocks.at(w[i]).back());
  return out;
}

Sft sft_from_matrix(const ZeroOneMatrix& a, const Alphabet& alphabet) {
  return Sft(alphabet, a);
}

namespace {

bool avoids(const Word& w, const WordSet& forbidden) {
  for (const Word& f : forbidden)
    if (occurs_in(f, w)) return false;
  return true;
}

// Removes vertices without an incoming or outgoing edge until none remain.
std::vector<std::size_t> essential_core(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      bool out = false;
      bool in = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive[j]) continue;
        out = out || adj[i][j];
        in = in || adj[j][i];
      }
      if (!out || !in) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) keep.push_back(i);
  return keep;
}

std::string block_name(const Alphabet& original, const Word& block) {
  if (original.single_char()) return original.format(block);
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += '+';
    out += original.symbol(block[i]);
  }
  return out;
}

void enumerate_words(std::size_t len, const std::vector<Letter>& letters, Word& prefix,
                     std::vector<Word>& out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (Letter x : letters) {
    prefix.push_back(x);
    enumerate_words(len, letters, prefix, out);
    prefix.truncate(prefix.size() - 1);
  }
}

}  // namespace

Sft higher_block_recode(const Alphabet& alphabet, const WordSet& forbidden) {
  if (forbidden.empty()) throw InvalidArgument("forbidden word set is empty");
  std::vector<bool> removed(alphabet.size(), false);
  for (const Word& f : forbidden) {
    if (f.empty()) throw InvalidArgument("the empty word cannot be forbidden");
    if (!alphabet.admits(f)) throw InvalidArgument("forbidden word is not over the alphabet");
    if (f.size() == 1) removed[f[0]] = true;
  }
  std::vector<Letter> kept;
  for (std::size_t x = 0; x < alphabet.size(); ++x)
    if (!removed[x]) kept.push_back(static_cast<Letter>(x));
  if (kept.empty()) throw PreconditionError("every letter is forbidden");

  WordSet effective;
  std::size_t longest = 2;
  for (const Word& f : forbidden) {
    if (f.size() < 2) continue;
    if (std::any_of(f.begin(), f.end(), [&](Letter x) { return removed[x]; })) continue;
    effective.insert(f);
    longest = std::max(longest, f.size());
  }

  const std::size_t block_length = longest - 1;
  std::vector<Word> candidates;
  Word scratch;
  enumerate_words(block_length, kept, scratch, candidates);
  std::vector<Word> blocks;
  for (Word& b : candidates)
    if (avoids(b, effective)) blocks.push_back(std::move(b));

  std::vector<std::vector<bool>> adj(blocks.size(), std::vector<bool>(blocks.size(), false));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (!std::equal(blocks[i].begin() + 1, blocks[i].end(), blocks[j].begin())) continue;
      Word joined = blocks[i];
      joined.push_back(blocks[j].back());
      adj[i][j] = avoids(joined, effective);
    }
  }
  const auto core = essential_core(adj);
  if (core.empty())
    throw PreconditionError("the forbidden words admit no bi-infinite sequence");

  ZeroOneMatrix m = ZeroOneMatrix::zeros(core.size());
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = 0; j < core.size(); ++j) m.set(i, j, adj[core[i]][core[j]]);

  if (block_length == 1 && core.size() == alphabet.size()) return Sft(alphabet, m);

  std::vector<std::string> names;
  std::vector<Word> dictionary;
  for (std::size_t i : core) {
    names.push_back(block_name(alphabet, blocks[i]));
    dictionary.push_back(blocks[i]);
  }
  return Sft(Alphabet(std::move(names)), m,
             Recoding{alphabet, std::move(dictionary), block_length});
}

namespace {

void extend_paths(const Sft& x, std::size_t n, Word& prefix, WordSet& out) {
  if (prefix.size() == n) {
    out.insert(prefix);
    return;
  }
  const std::size_t k = x.alphabet().size();
  for (std::size_t b = 0; b < k; ++b) {
    if (!prefix.empty() && !x.allows(prefix.back(), static_cast<Letter>(b))) continue;
    prefix.push_back(static_cast<Letter>(b));
    extend_paths(x, n, prefix, out);
    prefix.truncate(prefix.size() - 1);
  }
}

}  // namespace

WordSet sft_language(const Sft& x, std::size_t n) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  WordSet out;
  Word prefix;
  extend_paths(x, n, prefix, out);
  return out;
}

BigCount count_words(const Sft& x, std::size_t n) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  const auto& a = x.transition();
  const std::size_t k = a.order();
  std::vector<BigCount> v(k, 1);
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<BigCount> next(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (a.at(i, j)) next[i] += v[j];
    v = std::move(next);
  }
  return std::accumulate(v.begin(), v.end(), BigCount(0));
}

WordSet periodic_words(const Sft& x, std::size_t ell) {
  if (ell == 0) throw InvalidArgument("period must be at least 1");
  WordSet out;
  for (const Word& w : sft_language(x, ell))
    if (x.allows(w.back(), w.front())) out.insert(w);
  return out;
}

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix boolean_product(const BoolMatrix& p, const BoolMatrix& q) {
  const std::size_t n = p.size();
  BoolMatrix r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (p[i][l])
        for (std::size_t j = 0; j < n; ++j)
          if (q[l][j]) r[i][j] = true;
  return r;
}

BoolMatrix to_bool(const ZeroOneMatrix& a) {
  BoolMatrix m(a.order(), std::vector<bool>(a.order(), false));
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) m[i][j] = a.at(i, j);
  return m;
}

bool all_positive(const BoolMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const std::vector<bool>& row) {
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
  });
}

}  // namespace

MatrixClass matrix_classify(const ZeroOneMatrix& a) {
  const std::size_t n = a.order();
  const BoolMatrix base = to_bool(a);

  // Transitive closure (Warshall) for irreducibility.
  BoolMatrix reach = base;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][l])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[l][j]) reach[i][j] = true;
  MatrixClass out{all_positive(reach), false, std::nullopt};
  if (!out.irreducible) return out;

  const std::size_t bound = (n - 1) * (n - 1) + 1;
  BoolMatrix power = base;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (all_positive(power)) {
      out.primitive = true;
      out.witness_power = k;
      return out;
    }
    power = boolean_product(power, base);
  }
  return out;
}

double perron_eigenvalue(const ZeroOneMatrix& a, double tol, std::size_t max_iterations) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const MatrixClass cls = matrix_classify(a);
  if (!cls.irreducible) throw PreconditionError("perron_eigenvalue needs an irreducible matrix");
  const std::size_t n = a.order();
  const double shift = cls.primitive ? 0.0 : 1.0;

  std::vector<double> x(n, 1.0);
  double estimate = 0.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = shift * x[i];
      for (std::size_t j = 0; j < n; ++j)
        if (a.at(i, j)) s += x[j];
      y[i] = s;
    }
    double lo = y[0] / x[0];
    double hi = lo;
    double xy = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      xy += x[i] * y[i];
      xx += x[i] * x[i];
    }
    // The Rayleigh quotient is kept inside the Collatz-Wielandt bracket,
    // which always contains the eigenvalue.
    estimate = std::clamp(xy / xx, lo, hi) - shift;
    if (hi - lo < tol) return estimate;
    const double top = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
  }
  throw ConvergenceError(max_iterations, estimate);
}

Sft gap_shift(std::size_t k, std::size_t K) {
  if (k < 2 || K < k) throw InvalidArgument("gap_shift needs 2 <= k <= K");
  const Alphabet bits = Alphabet::from_chars("01");
  WordSet forbidden;
  for (std::size_t j = 0; j + 2 <= k; ++j) {
    Word w{1};
    for (std::size_t i = 0; i < j; ++i) w.push_back(0);
    w.push_back(1);
    forbidden.insert(std::move(w));
  }
  forbidden.insert(Word(std::vector<Letter>(K, 0)));
  return higher_block_recode(bits, forbidden);
}

Sft vertex_shift(const Digraph& g) {
  if (g.mode() != GraphMode::vertex) throw InvalidArgument("vertex_shift needs a vertex-mode graph");
  ZeroOneMatrix m = ZeroOneMatrix::zeros(g.vertex_count());
  for (const Edge& e : g.edges()) m.set(e.source, e.target, true);
  return Sft(g.vertices(), m);
}

Sft edge_shift(const Digraph& g) {
  if (g.mode() != GraphMode::edge) throw InvalidArgument("edge_shift needs an edge-mode graph");
  const std::size_t n = g.edges().size();
  ZeroOneMatrix m = ZeroOneMatrix::zeros(n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f : g.out_edges(g.edge(e).target)) m.set(e, f, true);
  return Sft(*g.labels(), m);
}

Sft shift_of(const Digraph& g) {
  return g.mode() == GraphMode::vertex ? vertex_shift(g) : edge_shift(g);
}

WordSet original_language(const Sft& x, std::size_t n) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  if (!x.recoding()) return sft_language(x, n);
  const std::size_t span = x.recoding()->block_length;
  WordSet out;
  if (n >= span) {
    for (const Word& w : sft_language(x, n - span + 1)) out.insert(x.decode(w));
  } else {
    for (const Word& b : x.recoding()->blocks) out.insert(b.substr(0, n));
  }
  return out;
}

BigCount count_original_words(const Sft& x, std::size_t n) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  if (!x.recoding()) return count_words(x, n);
  const std::size_t span = x.recoding()->block_length;
  // Decoding is injective on block paths, so counts transfer directly.
  if (n >= span) return count_words(x, n - span + 1);
  return BigCount(original_language(x, n).size());
}

ComplexityProfile complexity_profile(const Sft& x, std::size_t max_length) {
  ComplexityProfile p;
  for (std::size_t n = 1; n <= max_length; ++n) p.counts.push_back(count_original_words(x, n));
  return p;
}

bool is_submultiplicative(const ComplexityProfile& p) {
  for (std::size_t m = 1; m < p.horizon(); ++m)
    for (std::size_t n = 1; m + n <= p.horizon(); ++n)
      if (p.at(m + n) > p.at(m) * p.at(n)) return false;
  return true;
}

}  // namespace symdyn
