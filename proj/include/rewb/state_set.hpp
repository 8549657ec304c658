#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rewb/check.hpp"
#include "rewb/simd/bitset_kernels.hpp"

namespace rewb {

using StateId = std::uint32_t;
using simd::Word;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t states) { return (states + kWordBits - 1) / kWordBits; }

template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    while (w) {
      f(static_cast<StateId>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
}

inline bool test_bit(std::span<const Word> words, StateId q) {
  return (words[q / kWordBits] >> (q % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> words, StateId q) {
  words[q / kWordBits] |= Word{1} << (q % kWordBits);
}

/// Dense set of NFA states over a fixed universe [0, universe).
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), words_(words_for(universe)) {}
  StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe) {
    for (StateId q : members) insert(q);
  }

  std::size_t universe() const { return universe_; }

  bool contains(StateId q) const {
    REWB_CHECK(q < universe_);
    return test_bit(words_, q);
  }
  void insert(StateId q) {
    REWB_CHECK(q < universe_);
    set_bit(words_, q);
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  bool empty() const { return !simd::any(words_); }
  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  StateSet& operator|=(const StateSet& other) {
    REWB_CHECK(other.universe_ == universe_);
    simd::or_into(words_, other.words_);
    return *this;
  }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }

  bool intersects(const StateSet& other) const {
    REWB_CHECK(other.universe_ == universe_);
    return simd::intersects(words_, other.words_);
  }

  std::vector<StateId> members() const {
    std::vector<StateId> out;
    for_each_bit(words_, [&](StateId q) { out.push_back(q); });
    return out;
  }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// One simulation set per NFA state; row l is the set reached when state l
/// is regarded as initial. Stored as a row-major bit matrix.
class SummaryVector {
 public:
  SummaryVector() = default;
  explicit SummaryVector(std::size_t states)
      : states_(states), row_words_(words_for(states)), data_(states * row_words_, 0) {}

  std::size_t size() const { return states_; }
  std::size_t row_words() const { return row_words_; }

  std::span<Word> row(std::size_t l) {
    REWB_CHECK(l < states_);
    return {data_.data() + l * row_words_, row_words_};
  }
  std::span<const Word> row(std::size_t l) const {
    REWB_CHECK(l < states_);
    return {data_.data() + l * row_words_, row_words_};
  }

  StateSet row_set(std::size_t l) const {
    StateSet s(states_);
    auto r = row(l);
    std::copy(r.begin(), r.end(), s.words().begin());
    return s;
  }

  bool all_empty() const { return !simd::any(data_); }
  void clear() { std::fill(data_.begin(), data_.end(), Word{0}); }

  /// Adds state l to row l for every l.
  void inject_diagonal() {
    for (std::size_t l = 0; l < states_; ++l) set_bit(row(l), static_cast<StateId>(l));
  }

  friend bool operator==(const SummaryVector&, const SummaryVector&) = default;

 private:
  std::size_t states_ = 0;
  std::size_t row_words_ = 0;
  std::vector<Word> data_;
};

}  // namespace rewb
