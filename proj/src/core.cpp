#include "symdyn/core.hpp"

#include <algorithm>

#include "symdyn/errors.hpp"

namespace symdyn {

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw InvalidArgument("Word::substr out of range");
  const std::size_t end = len >= letters_.size() - pos ? letters_.size() : pos + len;
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(end));
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters, finished with a splitmix step.
  std::uint64_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  h ^= h >> 31;
  h *= 0x9e3779b97f4a7c15ull;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    if (i + len > text.size()) throw InvalidArgument("truncated UTF-8 sequence");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("alphabet must not be empty");
  if (symbols_.size() > 0xFFFF) throw InvalidArgument("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw InvalidArgument("alphabet symbols must be nonempty");
    if (s.find(',') != std::string::npos)
      throw InvalidArgument("alphabet symbol '" + s + "' contains a comma");
    if (!index_.emplace(s, static_cast<Letter>(i)).second)
      throw InvalidArgument("duplicate alphabet symbol '" + s + "'");
    if (split_code_points(s).size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  return Alphabet(split_code_points(chars));
}

const std::string& Alphabet::symbol(Letter x) const {
  if (x >= symbols_.size()) throw InvalidArgument("letter index out of range");
  return symbols_[x];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw InvalidArgument("unknown symbol '" + std::string(name) + "'");
}

bool Alphabet::admits(const Word& w) const noexcept {
  return std::all_of(w.begin(), w.end(),
                     [&](Letter x) { return x < symbols_.size(); });
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += ',';
    out += symbol(w[i]);
  }
  return out;
}

std::string Alphabet::format(const WordSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const Word& w : set) {
    if (!first) out += single_char_ ? ", " : "; ";
    out += format(w);
    first = false;
  }
  return out + "}";
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<std::string> names;
  if (single_char_) {
    names = split_code_points(text);
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      names.emplace_back(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return parse_symbols(names);
}

Word Alphabet::parse_symbols(const std::vector<std::string>& names) const {
  std::vector<Letter> letters;
  letters.reserve(names.size());
  for (const auto& n : names) letters.push_back(index_of(n));
  return Word(std::move(letters));
}

bool occurs_in(const Word& v, const Word& u) {
  if (v.size() > u.size()) return false;
  return std::search(u.begin(), u.end(), v.begin(), v.end()) != u.end();
}

bool is_subword(const Alphabet& alphabet, const Word& v, const Word& u) {
  if (!alphabet.admits(v) || !alphabet.admits(u))
    throw InvalidArgument("is_subword: word is not over the given alphabet");
  return occurs_in(v, u);
}

WordSet cyclic_conjugates(const Word& u) {
  if (u.empty()) throw InvalidArgument("cyclic_conjugates: empty word");
  WordSet out;
  for (std::size_t r = 0; r < u.size(); ++r) out.insert(u.substr(r) + u.substr(0, r));
  return out;
}

WordSet factors(const Word& u, std::size_t max_len) {
  WordSet out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t len = 1; len <= max_len && i + len <= u.size(); ++len)
      out.insert(u.substr(i, len));
  return out;
}

std::vector<Letter> letters_of(const Word& u) {
  std::vector<Letter> out(u.begin(), u.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symdyn
