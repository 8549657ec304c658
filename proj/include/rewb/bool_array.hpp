#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rewb/check.hpp"

namespace rewb {

/// Booleans indexed by 1-based string positions over an inclusive range
/// [first, last]. Out-of-range access aborts.
class BoolArray {
 public:
  BoolArray() = default;
  BoolArray(std::size_t first, std::size_t last)
      : first_(first), values_(last + 1 - first, 0) {
    REWB_CHECK(last + 1 >= first);
  }

  std::size_t first() const { return first_; }
  std::size_t last() const { return first_ + values_.size() - 1; }
  std::size_t size() const { return values_.size(); }

  bool operator[](std::size_t pos) const {
    REWB_CHECK(pos >= first_ && pos - first_ < values_.size());
    return values_[pos - first_] != 0;
  }

  void set(std::size_t pos, bool value) {
    REWB_CHECK(pos >= first_ && pos - first_ < values_.size());
    values_[pos - first_] = value ? 1 : 0;
  }

  friend bool operator==(const BoolArray&, const BoolArray&) = default;

 private:
  std::size_t first_ = 0;
  std::vector<std::uint8_t> values_;
};

}  // namespace rewb
