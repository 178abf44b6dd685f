#pragma once

#include <random>
#include <string>
#include <vector>

#include "trackrate/word.hpp"

namespace trackrate::testing {

inline AlphabetPtr small_alphabet() {
  return Alphabet::make({"a", "b", "c", "d"});
}

class RandomWords {
public:
  explicit RandomWords(AlphabetPtr alphabet, unsigned seed = 20240811)
      : alphabet_(std::move(alphabet)), rng_(seed) {}

  Letter letter() {
    std::uniform_int_distribution<int> edge(0, alphabet_->size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    return Letter{edge(rng_), sign(rng_) ? +1 : -1};
  }

  LetterSeq raw(int max_len = 24) {
    std::uniform_int_distribution<int> len(0, max_len);
    LetterSeq out;
    int n = len(rng_);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(letter());
    return out;
  }

  Word word(int max_len = 24) { return Word::tighten(alphabet_, raw(max_len)); }

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }

private:
  AlphabetPtr alphabet_;
  std::mt19937 rng_;
};

}  // namespace trackrate::testing
