#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rewb/oracles.hpp"
#include "rewb/stringology.hpp"
#include "test_support.hpp"

namespace rewb {
namespace {

using Idx = std::vector<std::size_t>;

std::vector<std::pair<std::string, Idx>> summarize(std::string_view w,
                                                   const std::vector<RepeatRecord>& recs) {
  std::vector<std::pair<std::string, Idx>> out;
  for (const auto& r : recs) out.emplace_back(std::string(r.repeat(w)), r.idx);
  return out;
}

TEST(SuffixIndex, MississimissByComparisonSort) {
  const std::string w = "mississimiss";
  const SuffixIndex si = build_suffix_index(w);
  const SuffixIndex ref = oracle::naive_suffix_index(w);
  EXPECT_EQ(si.sa, ref.sa);
  EXPECT_EQ(si.lcp, ref.lcp);
  // Values from the comparison sort, frozen.
  EXPECT_EQ(si.sa, (Idx{13, 8, 10, 5, 2, 9, 1, 12, 7, 4, 11, 6, 3}));
  EXPECT_EQ(si.lcp, (Idx{0, 0, 1, 3, 4, 0, 4, 0, 1, 2, 1, 2, 3}));
}

TEST(SuffixIndex, ExhaustiveSmallStrings) {
  for (const auto& w : testing::all_strings("ab", 10)) {
    if (w.empty()) continue;
    const SuffixIndex si = build_suffix_index(w);
    const SuffixIndex ref = oracle::naive_suffix_index(w);
    ASSERT_EQ(si.sa, ref.sa) << w;
    ASSERT_EQ(si.lcp, ref.lcp) << w;
  }
}

TEST(SuffixIndex, RandomLargerAlphabets) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    const std::string w = testing::random_string(rng, t % 2 ? "acgt" : "\x01\x80\xff", 1, 80);
    const SuffixIndex si = build_suffix_index(w);
    const SuffixIndex ref = oracle::naive_suffix_index(w);
    ASSERT_EQ(si.sa, ref.sa);
    ASSERT_EQ(si.lcp, ref.lcp);
  }
}

TEST(RightMaximalRepeats, MississimissOrder) {
  const std::string w = "mississimiss";
  const auto recs = right_maximal_repeats(w);
  const std::vector<std::pair<std::string, Idx>> expected = {
      {"issi", {2, 5}}, {"iss", {2, 5, 10}}, {"i", {2, 5, 8, 10}}, {"miss", {1, 9}},
      {"si", {4, 7}},   {"ssi", {3, 6}},     {"ss", {3, 6, 11}},   {"s", {3, 4, 6, 7, 11, 12}},
  };
  EXPECT_EQ(summarize(w, recs), expected);
}

TEST(RightMaximalRepeats, AgreesWithDefinitionExhaustively) {
  for (const auto& w : testing::all_strings("ab", 10)) {
    auto got = summarize(w, right_maximal_repeats(w));
    auto want = summarize(w, oracle::naive_right_maximal_repeats(w));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, want) << w;
  }
}

TEST(RightMaximalRepeats, AgreesWithDefinitionOnRandomStrings) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    const std::string w = testing::random_string(rng, t % 3 ? "ab" : "abc", 0, 40);
    const auto recs = right_maximal_repeats(w);
    auto got = summarize(w, recs);
    auto want = summarize(w, oracle::naive_right_maximal_repeats(w));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, want) << w;
    if (!w.empty()) {
      EXPECT_LE(recs.size(), w.size() - 1);
    }
    for (const auto& r : recs) {
      EXPECT_GE(r.idx.size(), 2u);
      EXPECT_TRUE(std::is_sorted(r.idx.begin(), r.idx.end()));
      EXPECT_TRUE(oracle::is_right_maximal(w, r.repeat(w)));
    }
  }
}

TEST(RightMaximalRepeats, SinkCanStop) {
  int seen = 0;
  const bool finished = enum_right_maximal_repeats("mississimiss", [&](const RepeatRecord&) {
    return ++seen < 3;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 3);
  EXPECT_TRUE(enum_right_maximal_repeats("a", [](const RepeatRecord&) { return false; }));
  EXPECT_TRUE(right_maximal_repeats("ab").empty());
}

TEST(Overlap, RunningInstance) {
  const std::string w = testing::kExampleSubject;
  EXPECT_EQ(max_overlap(4, Idx{1, 4, 7, 10}), 1u);
  EXPECT_EQ(max_overlap(3, Idx{2, 5, 8, 11}), 0u);
  EXPECT_EQ(max_overlap(7, Idx{1, 4, 7}), 4u);
  EXPECT_EQ(forward_map(7, Idx{1, 4, 7}), (Idx{7, 7, 7}));
  EXPECT_EQ(forward_map(4, Idx{1, 4, 7, 10}), (Idx{4, 7, 10, 10}));
  for (const auto& r : right_maximal_repeats(w)) {
    if (r.repeat(w) == "abba") {
      EXPECT_EQ(r.idx, (Idx{1, 4, 7, 10}));
      EXPECT_EQ(r.d, 1u);
    }
    if (r.repeat(w) == "abbabba") {
      EXPECT_EQ(r.idx, (Idx{1, 4, 7}));
      EXPECT_EQ(r.fwd, (Idx{7, 7, 7}));
    }
  }
}

TEST(Overlap, DAndFwdMatchDefinitions) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 300; ++t) {
    const std::string w = testing::random_string(rng, "ab", 0, 14);
    for (const auto& r : right_maximal_repeats(w)) {
      std::size_t d = 0;
      for (std::size_t a = 0; a < r.idx.size(); ++a) {
        for (std::size_t b = a + 1; b < r.idx.size(); ++b) {
          if (r.idx[a] + r.length > r.idx[b]) d = std::max(d, r.idx[a] + r.length - r.idx[b]);
        }
      }
      EXPECT_EQ(r.d, d) << w;
      ASSERT_EQ(r.fwd.size(), r.idx.size());
      for (std::size_t j = 0; j < r.idx.size(); ++j) {
        std::size_t f = 0;
        for (std::size_t p : r.idx) {
          if (p <= r.idx[j] + r.length - 1) f = std::max(f, p);
        }
        EXPECT_EQ(r.fwd[j], f) << w;
      }
    }
  }
}

}  // namespace
}  // namespace rewb
