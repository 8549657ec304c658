#include "rewb/stringology.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "rewb/check.hpp"

namespace rewb {
namespace {

// Byte values shifted up by one so the sentinel can take rank 0.
std::vector<std::size_t> symbols_with_sentinel(std::string_view w) {
  std::vector<std::size_t> t(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) t[i] = static_cast<unsigned char>(w[i]) + 1u;
  return t;
}

std::vector<std::size_t> suffix_array_0based(const std::vector<std::size_t>& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> sa(n), rank(t), tmp(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::size_t, std::size_t>(rank[i], i + k < n ? rank[i + k] + 1 : 0);
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      tmp[sa[r]] = tmp[sa[r - 1]] + (key(sa[r - 1]) < key(sa[r]) ? 1 : 0);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

void sorted_insert(std::vector<std::size_t>& v, std::size_t x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

void merge_into(std::vector<std::size_t>& dst, const std::vector<std::size_t>& src) {
  std::vector<std::size_t> out;
  out.reserve(dst.size() + src.size());
  std::merge(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(out));
  dst.swap(out);
}

}  // namespace

SuffixIndex build_suffix_index(std::string_view w) {
  REWB_CHECK(!w.empty());
  const auto t = symbols_with_sentinel(w);
  const std::size_t n = t.size();
  auto sa0 = suffix_array_0based(t);

  std::vector<std::size_t> inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[sa0[r]] = r;

  // Kasai: the sentinel is unique, so comparisons never run past the end.
  std::vector<std::size_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa0[inv[i] - 1];
    while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
    lcp[inv[i]] = h;
    if (h > 0) --h;
  }

  SuffixIndex idx;
  idx.sa.resize(n);
  for (std::size_t r = 0; r < n; ++r) idx.sa[r] = sa0[r] + 1;
  idx.lcp = std::move(lcp);
  return idx;
}

std::size_t max_overlap(std::size_t length, std::span<const std::size_t> idx) {
  std::size_t d = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    if (idx[j - 1] + length > idx[j]) d = std::max(d, idx[j - 1] + length - idx[j]);
  }
  return d;
}

std::vector<std::size_t> forward_map(std::size_t length, std::span<const std::size_t> idx) {
  std::vector<std::size_t> fwd(idx.size());
  if (idx.empty()) return fwd;
  // 1-based cursors as in the sweep's description; both move right to left.
  std::size_t left = idx.size();
  std::size_t right = idx.size();
  while (left >= 1) {
    if (idx[right - 1] <= idx[left - 1] + length - 1) {
      fwd[left - 1] = idx[right - 1];
      --left;
    } else {
      --right;
    }
  }
  return fwd;
}

bool enum_right_maximal_repeats(std::string_view w, const RepeatSink& sink) {
  if (w.size() < 2) return true;
  const SuffixIndex si = build_suffix_index(w);
  const std::size_t n = si.sa.size();  // |w| + 1

  struct Interval {
    std::size_t lcp;
    std::vector<std::size_t> idx;
  };
  std::vector<Interval> stack;
  stack.push_back({0, {}});

  // 1-based ranks: SA(i) and LCP(i), with LCP(n+1) = 0.
  auto SA = [&](std::size_t i) { return si.sa[i - 1]; };
  auto LCP = [&](std::size_t i) { return i <= n ? si.lcp[i - 1] : std::size_t{0}; };

  RepeatRecord rec;
  auto emit = [&](const Interval& iv) {
    rec.length = iv.lcp;
    rec.idx = iv.idx;
    rec.d = max_overlap(rec.length, rec.idx);
    rec.fwd = forward_map(rec.length, rec.idx);
    return sink(rec);
  };

  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t next = LCP(i + 1);
    Interval& top = stack.back();
    if (next > top.lcp) {
      stack.push_back({next, {SA(i)}});
    } else if (next == top.lcp) {
      if (top.lcp != 0) sorted_insert(top.idx, SA(i));
    } else {
      sorted_insert(top.idx, SA(i));
      while (next < stack.back().lcp) {
        Interval popped = std::move(stack.back());
        stack.pop_back();
        if (!emit(popped)) return false;
        Interval& below = stack.back();
        if (next <= below.lcp) {
          if (below.lcp != 0) merge_into(below.idx, popped.idx);
        } else {
          stack.push_back({next, std::move(popped.idx)});
        }
      }
    }
  }
  return true;
}

std::vector<RepeatRecord> right_maximal_repeats(std::string_view w) {
  std::vector<RepeatRecord> out;
  enum_right_maximal_repeats(w, [&](const RepeatRecord& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

}  // namespace rewb
