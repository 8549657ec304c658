#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace rewb {

/// Suffix array and LCP array of w$, where $ is an out-of-band sentinel
/// smaller than every byte. Positions are 1-based (the sentinel sits at
/// |w|+1); ranks are the 0-based vector indices.
struct SuffixIndex {
  std::vector<std::size_t> sa;
  /// lcp[k] is the longest common prefix of suffixes sa[k-1] and sa[k];
  /// lcp[0] is 0.
  std::vector<std::size_t> lcp;
};

/// Prefix doubling for SA, Kasai for LCP.
SuffixIndex build_suffix_index(std::string_view w);

/// A right-maximal repeat of w with its sorted occurrence array.
struct RepeatRecord {
  std::size_t length = 0;
  std::vector<std::size_t> idx;  // 1-based starts, strictly increasing, size >= 2
  std::size_t d = 0;             // max overlap of adjacent occurrences
  std::vector<std::size_t> fwd;  // fwd[j] = f(idx[j])

  std::string_view repeat(std::string_view w) const { return w.substr(idx.front() - 1, length); }
};

/// max({0} ∪ {idx[j-1] + length - idx[j]}).
std::size_t max_overlap(std::size_t length, std::span<const std::size_t> idx);
inline std::size_t max_overlap(const RepeatRecord& rec) { return max_overlap(rec.length, rec.idx); }

/// fwd[j] = max{ p in idx | p <= idx[j] + length - 1 }, by a right-to-left
/// two-pointer sweep.
std::vector<std::size_t> forward_map(std::size_t length, std::span<const std::size_t> idx);
inline std::vector<std::size_t> forward_map(const RepeatRecord& rec) {
  return forward_map(rec.length, rec.idx);
}

/// Receives each record; returning false stops the enumeration.
using RepeatSink = std::function<bool(const RepeatRecord&)>;

/// Streams every right-maximal repeat of w exactly once, bottom-up over the
/// LCP-interval tree, with d and fwd filled in. Returns false if the sink
/// stopped the enumeration early.
bool enum_right_maximal_repeats(std::string_view w, const RepeatSink& sink);

/// Materialized form of the enumeration, in emission order.
std::vector<RepeatRecord> right_maximal_repeats(std::string_view w);

}  // namespace rewb
