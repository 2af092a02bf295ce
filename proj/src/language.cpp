// Exact legal languages of random substitutions.
//
// For a window size N and a letter a, let W_k(a) be the set of words of
// length <= N occurring in realizations of s^k(a). A window of length <= N
// in a realization of s(w) covers at most N letters of w, so W_{k+1}(a) is
// the factor closure of the windows of s(v) for v in W_k(a). Each W_k(a)
// lives in a finite lattice, so the sequence is eventually periodic; the
// language is the union of everything seen before the first repetition.
//
// The expensive part is enumerating windows. Two reductions keep it
// proportional to the output instead of to |W_k(a)| times the number of
// realizations:
//   * letters with identical image sets are interchangeable when generating
//     windows, so W_k(a) is first projected onto image classes;
//   * a prefix of a word in W_k(a) only matters through its set of right
//     extensions, so prefixes are merged into follower classes and windows
//     are grown by a breadth-first search over (class, partial window)
//     states, each visited once.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "symdyn/errors.hpp"
#include "symdyn/randsub.hpp"

namespace symdyn {
namespace {

// Words of one fixed length, stored back to back.
class Level {
 public:
  explicit Level(std::size_t len = 0) : len_(len) {}

  std::size_t length() const noexcept { return len_; }
  std::size_t count() const noexcept { return len_ == 0 ? 0 : data_.size() / len_; }
  std::span<const Letter> at(std::size_t i) const {
    return {data_.data() + i * len_, len_};
  }
  const std::vector<Letter>& data() const noexcept { return data_; }

  void push(std::span<const Letter> w) { data_.insert(data_.end(), w.begin(), w.end()); }

  // Sorts lexicographically and drops duplicates.
  void normalize() {
    const std::size_t n = count();
    if (n < 2) return;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return less(at(x), at(y));
    });
    std::vector<Letter> sorted;
    sorted.reserve(data_.size());
    std::span<const Letter> prev;
    for (std::size_t i : order) {
      const auto w = at(i);
      if (!prev.empty() && std::equal(w.begin(), w.end(), prev.begin())) continue;
      sorted.insert(sorted.end(), w.begin(), w.end());
      prev = w;
    }
    data_ = std::move(sorted);
  }

  bool contains(std::span<const Letter> w) const {
    std::size_t lo = 0;
    std::size_t hi = count();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (less(at(mid), w)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < count() && std::equal(w.begin(), w.end(), at(lo).begin());
  }

  // Union with another normalized level of the same length.
  void merge(const Level& other) {
    if (other.count() == 0) return;
    if (count() == 0) {
      data_ = other.data_;
      return;
    }
    std::vector<Letter> out;
    out.reserve(data_.size() + other.data_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < count() || j < other.count()) {
      if (j == other.count() || (i < count() && less(at(i), other.at(j)))) {
        const auto w = at(i++);
        out.insert(out.end(), w.begin(), w.end());
      } else if (i == count() || less(other.at(j), at(i))) {
        const auto w = other.at(j++);
        out.insert(out.end(), w.begin(), w.end());
      } else {
        const auto w = at(i++);
        ++j;
        out.insert(out.end(), w.begin(), w.end());
      }
    }
    data_ = std::move(out);
  }

  friend bool operator==(const Level&, const Level&) = default;

  static bool less(std::span<const Letter> x, std::span<const Letter> y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  std::size_t len_;
  std::vector<Letter> data_;
};

// levels[n - 1] holds the words of length n.
struct WindowSet {
  std::vector<Level> levels;

  explicit WindowSet(std::size_t max_length) {
    for (std::size_t n = 1; n <= max_length; ++n) levels.emplace_back(n);
  }

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

  // The letter x when the set is exactly {x}.
  std::optional<Letter> singleton() const {
    if (levels[0].count() != 1) return std::nullopt;
    for (std::size_t n = 1; n < levels.size(); ++n)
      if (levels[n].count() != 0) return std::nullopt;
    return levels[0].at(0)[0];
  }
};

struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::uint64_t finish(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return h;
}

Fingerprint fingerprint(const WindowSet& w) {
  std::uint64_t a = 0x9e3779b97f4a7c15ull;
  std::uint64_t b = 0x6a09e667f3bcc909ull;
  auto mix = [&](std::uint64_t x) {
    a = (a ^ x) * 0x100000001b3ull;
    b = (b + x + 0x632be59bd9b4e019ull) * 0xbf58476d1ce4e5b9ull;
    b ^= b >> 29;
  };
  for (const Level& level : w.levels) {
    mix(level.length());
    mix(level.count());
    for (Letter x : level.data()) mix(x);
  }
  return {finish(a), finish(b)};
}

std::u16string state_key(std::uint32_t cls, std::span<const Letter> partial) {
  std::u16string key;
  key.reserve(partial.size() + 2);
  key.push_back(static_cast<char16_t>(cls & 0xFFFF));
  key.push_back(static_cast<char16_t>(cls >> 16));
  for (Letter x : partial) key.push_back(static_cast<char16_t>(x));
  return key;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t x : v) h = (h ^ x) * 0x100000001b3ull;
    return static_cast<std::size_t>(finish(h));
  }
};

class WindowEngine {
 public:
  WindowEngine(const RandomSubstitution& s, std::size_t max_length, const Limits& limits)
      : s_(s), n_(max_length), limits_(limits), image_class_(s.size()) {
    std::vector<const WordSet*> seen;
    for (std::size_t a = 0; a < s.size(); ++a) {
      const WordSet& imgs = s.images(static_cast<Letter>(a));
      std::size_t c = 0;
      while (c < seen.size() && *seen[c] != imgs) ++c;
      if (c == seen.size()) {
        seen.push_back(&imgs);
        representatives_.push_back(static_cast<Letter>(a));
        class_images_.emplace_back(imgs.begin(), imgs.end());
      }
      image_class_[a] = static_cast<Letter>(c);
    }
  }

  std::size_t class_count() const noexcept { return representatives_.size(); }
  Letter representative(std::size_t c) const { return representatives_[c]; }
  Letter image_class(Letter a) const { return image_class_[a]; }

  WindowSet initial(Letter a) const {
    WindowSet w(n_);
    const Letter one[1] = {a};
    w.levels[0].push(one);
    return w;
  }

  WindowSet step(const WindowSet& current) const {
    const auto projected = project(current);
    const auto follower = follower_classes(projected);
    return close(windows(projected, follower));
  }

 private:
  struct Followers {
    std::vector<std::vector<std::uint32_t>> cls;  // per level, per word
    std::vector<std::vector<std::pair<Letter, std::uint32_t>>> transitions;
  };

  void check_size(std::size_t n) const {
    if (n > limits_.max_set_size) throw ResourceCapError("max_set_size", limits_.max_set_size);
  }

  std::vector<Level> project(const WindowSet& w) const {
    std::vector<Level> out;
    std::vector<Letter> buf;
    for (const Level& level : w.levels) {
      Level p(level.length());
      for (std::size_t i = 0; i < level.count(); ++i) {
        const auto word = level.at(i);
        buf.assign(word.begin(), word.end());
        for (Letter& x : buf) x = image_class_[x];
        p.push(buf);
      }
      p.normalize();
      out.push_back(std::move(p));
    }
    return out;
  }

  // Two prefixes share a class iff they have the same right extensions.
  // Class 0 has none.
  Followers follower_classes(const std::vector<Level>& p) const {
    Followers f;
    f.cls.resize(p.size());
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> ids;
    ids.emplace(std::vector<std::uint32_t>{}, 0);
    f.transitions.emplace_back();
    std::vector<std::uint32_t> sig;
    for (std::size_t li = p.size(); li-- > 0;) {
      const Level& level = p[li];
      f.cls[li].resize(level.count());
      const Level* longer = li + 1 < p.size() ? &p[li + 1] : nullptr;
      std::size_t j = 0;
      for (std::size_t i = 0; i < level.count(); ++i) {
        const auto w = level.at(i);
        sig.clear();
        if (longer) {
          while (j < longer->count() &&
                 Level::less(longer->at(j).first(w.size()), w))
            ++j;
          while (j < longer->count()) {
            const auto x = longer->at(j);
            if (!std::equal(w.begin(), w.end(), x.begin())) break;
            sig.push_back(x.back());
            sig.push_back(f.cls[li + 1][j]);
            ++j;
          }
        }
        auto [it, inserted] = ids.emplace(sig, static_cast<std::uint32_t>(ids.size()));
        if (inserted) {
          std::vector<std::pair<Letter, std::uint32_t>> t;
          for (std::size_t k = 0; k < sig.size(); k += 2)
            t.emplace_back(static_cast<Letter>(sig[k]), sig[k + 1]);
          f.transitions.push_back(std::move(t));
        }
        f.cls[li][i] = it->second;
      }
    }
    return f;
  }

  // Maximal windows of s(v) for v in the projected set, grouped by length.
  std::vector<Level> windows(const std::vector<Level>& p, const Followers& f) const {
    std::vector<Level> emitted;
    for (std::size_t n = 1; n <= n_; ++n) emitted.emplace_back(n);
    const std::size_t flush_at = std::max<std::size_t>(limits_.max_set_size, 1 << 20) * 2;
    std::vector<std::size_t> pending(n_, 0);

    auto emit = [&](std::span<const Letter> w) {
      const std::size_t len = std::min(w.size(), n_);
      emitted[len - 1].push(w.first(len));
      if (++pending[len - 1] >= flush_at) {
        emitted[len - 1].normalize();
        check_size(emitted[len - 1].count());
        pending[len - 1] = emitted[len - 1].count();
      }
    };

    std::unordered_set<std::u16string> visited;
    std::vector<std::pair<std::uint32_t, std::vector<Letter>>> stack;
    auto handle = [&](std::uint32_t cls, std::vector<Letter> partial) {
      if (partial.size() >= n_ || f.transitions[cls].empty()) {
        emit(partial);
        return;
      }
      if (!visited.insert(state_key(cls, partial)).second) return;
      check_size(visited.size());
      stack.emplace_back(cls, std::move(partial));
    };

    const Level& letters = p[0];
    for (std::size_t i = 0; i < letters.count(); ++i) {
      const Letter c = letters.at(i)[0];
      for (const Word& r : class_images_[c])
        for (std::size_t off = 0; off < r.size(); ++off)
          handle(f.cls[0][i], std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(off),
                                                  r.end()));
    }
    while (!stack.empty()) {
      auto [cls, partial] = std::move(stack.back());
      stack.pop_back();
      for (const auto& [d, next] : f.transitions[cls]) {
        for (const Word& r : class_images_[d]) {
          std::vector<Letter> grown = partial;
          grown.insert(grown.end(), r.begin(), r.end());
          handle(next, std::move(grown));
        }
      }
    }
    return emitted;
  }

  // Factor closure, longest level first: every factor of length n - 1 is a
  // prefix or suffix of some factor of length n.
  WindowSet close(std::vector<Level> emitted) const {
    WindowSet out(n_);
    for (std::size_t n = n_; n >= 1; --n) {
      Level& level = emitted[n - 1];
      level.normalize();
      check_size(level.count());
      if (n > 1) {
        Level& shorter = emitted[n - 2];
        for (std::size_t i = 0; i < level.count(); ++i) {
          const auto w = level.at(i);
          shorter.push(w.first(n - 1));
          shorter.push(w.last(n - 1));
        }
      }
      out.levels[n - 1] = std::move(level);
    }
    return out;
  }

  const RandomSubstitution& s_;
  std::size_t n_;
  Limits limits_;
  std::vector<Letter> image_class_;
  std::vector<Letter> representatives_;
  std::vector<std::vector<Word>> class_images_;
};

// Runs the window iteration until each distinct set has been seen once,
// calling visit(k, a, W_k(a)) in order of k, then letter. For k >= 1 only
// the first letter of each image class is visited, since the others share
// its set.
// `visit` returns true to stop early, in which case nullopt is returned.
template <class Visit>
std::optional<SaturationCertificate> iterate_windows(const RandomSubstitution& s,
                                                     std::size_t max_length,
                                                     const Limits& limits, Visit&& visit) {
  const WindowEngine engine(s, max_length, limits);
  const std::size_t m = s.size();
  for (std::size_t a = 0; a < m; ++a)
    if (visit(std::size_t{0}, static_cast<Letter>(a), engine.initial(static_cast<Letter>(a))))
      return std::nullopt;

  // Letters in one image class share W_k for k >= 1, so only class
  // representatives are iterated.
  struct Track {
    WindowSet current;
    std::vector<Fingerprint> history;             // k = 1, 2, ...
    std::vector<std::optional<Letter>> singles;   // k = 1, 2, ...
    std::optional<std::pair<std::size_t, std::size_t>> repeat;  // (j, k): W_k = W_j
  };
  std::vector<Track> tracks;
  for (std::size_t c = 0; c < engine.class_count(); ++c)
    tracks.push_back(Track{engine.initial(engine.representative(c)), {}, {}, std::nullopt});

  for (std::size_t k = 1;; ++k) {
    if (k > limits.max_iterations)
      throw ResourceCapError("max_iterations", limits.max_iterations);
    bool any_new = false;
    std::vector<bool> fresh(tracks.size(), false);
    for (std::size_t c = 0; c < tracks.size(); ++c) {
      Track& t = tracks[c];
      if (t.repeat) continue;
      WindowSet next = engine.step(t.current);
      const Fingerprint fp = fingerprint(next);
      for (std::size_t j = 1; j < k && !t.repeat; ++j) {
        if (t.history[j - 1] != fp) continue;
        // Confirm the match exactly by recomputing W_j.
        WindowSet earlier = engine.initial(engine.representative(c));
        for (std::size_t i = 0; i < j; ++i) earlier = engine.step(earlier);
        if (earlier == next) t.repeat = std::make_pair(j, k);
      }
      if (t.repeat) continue;
      t.history.push_back(fp);
      t.singles.push_back(next.singleton());
      t.current = std::move(next);
      fresh[c] = true;
      any_new = true;
    }
    if (!any_new) break;
    for (std::size_t c = 0; c < tracks.size(); ++c)
      if (fresh[c] && visit(k, engine.representative(c), tracks[c].current))
        return std::nullopt;
  }

  // Per letter, the sequence is {a}, W_1, W_2, ... of its class. The sets
  // W_1 .. W_{k-1} before the class repeat are pairwise distinct, so an
  // earlier repetition can only involve the initial {a}.
  std::size_t preperiod = 0;
  std::size_t period = 1;
  for (std::size_t a = 0; a < m; ++a) {
    const Track& t = tracks[engine.image_class(static_cast<Letter>(a))];
    std::size_t pre = t.repeat->first;
    std::size_t per = t.repeat->second - t.repeat->first;
    for (std::size_t k = 1; k <= t.singles.size(); ++k) {
      if (t.singles[k - 1] == static_cast<Letter>(a)) {
        pre = 0;
        per = k;
        break;
      }
    }
    preperiod = std::max(preperiod, pre);
    period = std::lcm(period, per);
  }
  return SaturationCertificate{preperiod, period};
}

}  // namespace

LanguageTable language_upto(const RandomSubstitution& s, std::size_t max_length,
                            const Limits& limits) {
  if (max_length == 0) throw InvalidArgument("language_upto needs max_length >= 1");
  WindowSet all(max_length);
  const auto certificate = iterate_windows(
      s, max_length, limits, [&](std::size_t, Letter, const WindowSet& w) {
        for (std::size_t n = 0; n < max_length; ++n) {
          all.levels[n].merge(w.levels[n]);
          if (all.levels[n].count() > limits.max_set_size)
            throw ResourceCapError("max_set_size", limits.max_set_size);
        }
        return false;
      });

  std::vector<WordSet> by_length(max_length);
  for (std::size_t n = 0; n < max_length; ++n) {
    const Level& level = all.levels[n];
    for (std::size_t i = 0; i < level.count(); ++i) {
      const auto w = level.at(i);
      by_length[n].emplace_hint(by_length[n].end(), std::vector<Letter>(w.begin(), w.end()));
    }
  }
  return LanguageTable(std::move(by_length), *certificate);
}

LegalityResult is_legal(const RandomSubstitution& s, const Word& u, const Limits& limits) {
  if (u.empty()) throw InvalidArgument("is_legal needs a nonempty word");
  if (!s.alphabet().admits(u)) throw InvalidArgument("word is not over the substitution alphabet");
  std::optional<LegalityWitness> found;
  iterate_windows(s, u.size(), limits, [&](std::size_t k, Letter a, const WindowSet& w) {
    if (!w.levels[u.size() - 1].contains(u.view())) return false;
    found = LegalityWitness{a, k};
    return true;
  });
  return {found.has_value(), found};
}

}  // namespace symdyn
