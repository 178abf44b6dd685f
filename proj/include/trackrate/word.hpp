#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trackrate/alphabet.hpp"
#include "trackrate/errors.hpp"

namespace trackrate {

namespace detail {

inline LetterSeq free_reduce(LetterSeq raw) {
  LetterSeq out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// Booth's least-rotation algorithm on the letter-key sequence.
inline int least_rotation_start(const LetterSeq& w) {
  const int n = static_cast<int>(w.size());
  if (n <= 1) return 0;
  std::vector<int> s(2 * n);
  for (int i = 0; i < 2 * n; ++i) s[i] = letter_key(w[i % n]);
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int sj = s[j];
    int i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

inline LetterSeq rotate(const LetterSeq& w, int start) {
  LetterSeq out;
  out.reserve(w.size());
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) out.push_back(w[(start + i) % n]);
  return out;
}

}  // namespace detail

// Freely reduced word over an edge alphabet. Values are immutable; every
// constructor path goes through free reduction.
class Word {
public:
  Word() = default;

  static Word tighten(AlphabetPtr alphabet, LetterSeq raw) {
    if (!alphabet) throw ParameterError("word needs an alphabet");
    check_letters(*alphabet, raw);
    return Word(std::move(alphabet), detail::free_reduce(std::move(raw)));
  }

  static Word parse(AlphabetPtr alphabet, std::string_view text) {
    if (!alphabet) throw ParameterError("word needs an alphabet");
    return tighten(alphabet, parse_letters(*alphabet, text));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LetterSeq& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const { return Word(alphabet_, trackrate::inverse(letters_)); }

  friend Word operator*(const Word& u, const Word& v) {
    if (!same_alphabet(u.alphabet_, v.alphabet_))
      throw AlphabetMismatchError("cannot concatenate words over different alphabets");
    LetterSeq raw = u.letters_;
    raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
    return Word(u.alphabet_, detail::free_reduce(std::move(raw)));
  }

  friend bool operator==(const Word& u, const Word& v) {
    return same_alphabet(u.alphabet_, v.alphabet_) && u.letters_ == v.letters_;
  }

  std::string str() const { return alphabet_ ? format_letters(*alphabet_, letters_) : std::string(); }

private:
  Word(AlphabetPtr alphabet, LetterSeq reduced)
      : alphabet_(std::move(alphabet)), letters_(std::move(reduced)) {}

  friend class CyclicWord;

  AlphabetPtr alphabet_;
  LetterSeq letters_;
};

class CyclicWord;

struct CyclicDecomposition;

// Cyclically reduced word, kept in its as-constructed rotation. Equality up
// to rotation goes through the canonical (lexicographically least) rotation.
class CyclicWord {
public:
  static CyclicDecomposition reduce(const Word& w);

  // Requires w to be cyclically reduced already.
  static CyclicWord from_word(const Word& w) {
    if (!cyclically_reduced(w.letters()))
      throw PreconditionError("word is not cyclically reduced");
    return CyclicWord(w.alphabet(), w.letters());
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LetterSeq& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  CyclicWord inverse() const { return CyclicWord(alphabet_, trackrate::inverse(letters_)); }

  LetterSeq canonical_rotation() const {
    return detail::rotate(letters_, detail::least_rotation_start(letters_));
  }

  Word word() const { return Word(alphabet_, letters_); }
  std::string str() const { return alphabet_ ? format_letters(*alphabet_, letters_) : std::string(); }

  struct Match {
    bool equal = false;
    int rotation = 0;   // v rotated left by this many letters equals u
    bool inverted = false;
  };

  // Does v equal u as a cyclic word, optionally up to inversion?
  static Match match(const CyclicWord& u, const CyclicWord& v, bool up_to_inversion) {
    if (!same_alphabet(u.alphabet_, v.alphabet_))
      throw AlphabetMismatchError("cyclic comparison across alphabets");
    if (auto r = rotation_of(u.letters_, v.letters_)) return {true, *r, false};
    if (up_to_inversion) {
      if (auto r = rotation_of(u.letters_, trackrate::inverse(v.letters_))) return {true, *r, true};
    }
    return {};
  }

  static bool cyclically_reduced(const LetterSeq& w) {
    if (!freely_reduced(w)) return false;
    return w.size() < 2 || w.front() != trackrate::inverse(w.back());
  }

private:
  CyclicWord(AlphabetPtr alphabet, LetterSeq letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

  static std::optional<int> rotation_of(const LetterSeq& u, const LetterSeq& v) {
    if (u.size() != v.size()) return std::nullopt;
    const int n = static_cast<int>(u.size());
    if (n == 0) return 0;
    for (int r = 0; r < n; ++r) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = v[(r + i) % n] == u[i];
      if (ok) return r;
    }
    return std::nullopt;
  }

  AlphabetPtr alphabet_;
  LetterSeq letters_;
};

struct CyclicDecomposition {
  CyclicWord core;
  Word conjugator;  // original = conjugator * core * conjugator^-1
};

inline CyclicDecomposition CyclicWord::reduce(const Word& w) {
  const LetterSeq& ls = w.letters();
  int i = 0, j = static_cast<int>(ls.size()) - 1;
  while (i < j && ls[static_cast<std::size_t>(i)] == trackrate::inverse(ls[static_cast<std::size_t>(j)])) {
    ++i;
    --j;
  }
  LetterSeq conj(ls.begin(), ls.begin() + i);
  LetterSeq core(ls.begin() + i, ls.begin() + j + 1);
  return {CyclicWord(w.alphabet(), std::move(core)), Word(w.alphabet(), std::move(conj))};
}

inline bool cyclically_equal(const CyclicWord& u, const CyclicWord& v, bool up_to_inversion = false) {
  if (!same_alphabet(u.alphabet(), v.alphabet()))
    throw AlphabetMismatchError("cyclic comparison across alphabets");
  LetterSeq cu = u.canonical_rotation();
  if (cu == v.canonical_rotation()) return true;
  return up_to_inversion && cu == v.inverse().canonical_rotation();
}

// Edge-to-word assignment over one alphabet; may be partial. Application
// substitutes images (inverted for negative letters) and reduces.
class EdgeMorphism {
public:
  EdgeMorphism(AlphabetPtr alphabet, std::vector<std::optional<Word>> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (!alphabet_) throw ParameterError("morphism needs an alphabet");
    if (static_cast<int>(images_.size()) != alphabet_->size())
      throw ParameterError("morphism image table has the wrong size");
    for (const auto& img : images_)
      if (img && !same_alphabet(img->alphabet(), alphabet_))
        throw AlphabetMismatchError("morphism image over a different alphabet");
  }

  static EdgeMorphism total(AlphabetPtr alphabet, const std::vector<Word>& images) {
    std::vector<std::optional<Word>> opt(images.begin(), images.end());
    return EdgeMorphism(std::move(alphabet), std::move(opt));
  }

  static EdgeMorphism identity(AlphabetPtr alphabet) {
    std::vector<std::optional<Word>> images;
    for (int e = 0; e < alphabet->size(); ++e)
      images.push_back(Word::tighten(alphabet, {Letter{e, +1}}));
    return EdgeMorphism(std::move(alphabet), std::move(images));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }

  const Word& image(int edge) const {
    const auto& img = images_.at(static_cast<std::size_t>(edge));
    if (!img)
      throw UndefinedEdgeError("no image for edge '" + alphabet_->name(edge) + "'");
    return *img;
  }

  Word apply(const LetterSeq& w) const {
    check_letters(*alphabet_, w);
    LetterSeq raw;
    for (Letter l : w) {
      const Word& img = image(l.edge);
      if (l.sign > 0)
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
      else {
        LetterSeq inv = trackrate::inverse(img.letters());
        raw.insert(raw.end(), inv.begin(), inv.end());
      }
    }
    return Word::tighten(alphabet_, std::move(raw));
  }

  Word apply(const Word& w) const {
    if (!same_alphabet(w.alphabet(), alphabet_))
      throw AlphabetMismatchError("morphism applied to a word over a different alphabet");
    return apply(w.letters());
  }

  // this after g: e -> this(g(e))
  EdgeMorphism compose_after(const EdgeMorphism& g) const {
    if (!same_alphabet(alphabet_, g.alphabet_))
      throw AlphabetMismatchError("composition across alphabets");
    std::vector<std::optional<Word>> images;
    images.reserve(images_.size());
    for (int e = 0; e < alphabet_->size(); ++e) {
      if (!g.images_[static_cast<std::size_t>(e)])
        images.push_back(std::nullopt);
      else
        images.push_back(apply(*g.images_[static_cast<std::size_t>(e)]));
    }
    return EdgeMorphism(alphabet_, std::move(images));
  }

private:
  AlphabetPtr alphabet_;
  std::vector<std::optional<Word>> images_;
};

}  // namespace trackrate
