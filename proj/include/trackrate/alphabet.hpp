#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trackrate/errors.hpp"

namespace trackrate {

// Shared, immutable edge alphabet. Edge order is the order names were given;
// it fixes matrix row/column indexing everywhere downstream.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ParameterError("alphabet needs at least one edge");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!valid_name(names_[i])) throw ParseError("invalid edge name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw ParseError("duplicate edge name '" + names_[i] + "'");
    }
  }

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int edge) const { return names_.at(static_cast<std::size_t>(edge)); }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  // [A-Za-z][A-Za-z0-9_]*
  static bool valid_name(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s.substr(1))
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Signed edge letter. sign is +1 for the edge's own orientation, -1 for the
// reverse traversal.
struct Letter {
  int edge = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter l) { return Letter{l.edge, -l.sign}; }

// Total order used for canonical rotations: e < e^-1 < f < f^-1 < ...
constexpr int letter_key(Letter l) { return 2 * l.edge + (l.sign < 0 ? 1 : 0); }

using LetterSeq = std::vector<Letter>;

inline LetterSeq inverse(const LetterSeq& w) {
  LetterSeq out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

inline bool freely_reduced(const LetterSeq& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return true;
}

inline void check_letters(const Alphabet& alphabet, const LetterSeq& w) {
  for (Letter l : w) {
    if (l.edge < 0 || l.edge >= alphabet.size())
      throw AlphabetMismatchError("letter refers to an edge outside the alphabet");
    if (l.sign != 1 && l.sign != -1) throw ParameterError("letter sign must be +1 or -1");
  }
}

inline std::string format_letter(const Alphabet& alphabet, Letter l) {
  std::string s = alphabet.name(l.edge);
  if (l.sign < 0) s += "^-1";
  return s;
}

// Whitespace-separated tokens, "name" or "name^-1". Empty string is the
// empty sequence.
inline std::string format_letters(const Alphabet& alphabet, const LetterSeq& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(alphabet, w[i]);
  }
  return out;
}

inline LetterSeq parse_letters(const Alphabet& alphabet, std::string_view text) {
  LetterSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    int sign = +1;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      sign = -1;
      token = token.substr(0, token.size() - 3);
    }
    auto edge = alphabet.index_of(token);
    if (!edge) throw ParseError("unknown edge name '" + std::string(token) + "'");
    out.push_back(Letter{*edge, sign});
    i = j;
  }
  return out;
}

}  // namespace trackrate
