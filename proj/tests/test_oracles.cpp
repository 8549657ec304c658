#include <gtest/gtest.h>

#include <random>
#include <string>

#include "rewb/oracles.hpp"
#include "test_support.hpp"

namespace rewb {
namespace {

using oracle::Witness;

TEST(BruteForce, UniqueSquare) {
  const auto wit = oracle::brute_force_match(parse_rewb("((?:a|b)+)\\1"), "abab");
  ASSERT_TRUE(wit);
  EXPECT_EQ(*wit, (Witness{"ab", 1, 3}));
}

TEST(BruteForce, SeparatedCopies) {
  const auto wit = oracle::brute_force_match(parse_rewb("(a)b\\1"), "aba");
  ASSERT_TRUE(wit);
  EXPECT_EQ(*wit, (Witness{"a", 1, 3}));
  EXPECT_FALSE(oracle::brute_force_match(parse_rewb("(a)b\\1"), "abb"));
}

TEST(BruteForce, RunningInstanceWitnessValidates) {
  const RewbQuery q = parse_rewb(testing::kExamplePattern);
  const auto wit = oracle::brute_force_match(q, testing::kExampleSubject);
  ASSERT_TRUE(wit);
  EXPECT_TRUE(oracle::validate_witness(q, testing::kExampleSubject, *wit));
  // A nonempty copy also exists when e excludes ε.
  const RewbQuery plus = parse_rewb(oracle::rewb_corpus()[1]);
  const auto wit_plus = oracle::brute_force_match(plus, testing::kExampleSubject);
  ASSERT_TRUE(wit_plus);
  EXPECT_FALSE(wit_plus->beta.empty());
  EXPECT_TRUE(oracle::validate_witness(plus, testing::kExampleSubject, *wit_plus));
}

TEST(BruteForce, WitnessesValidate) {
  std::mt19937_64 rng(101);
  const auto& corpus = oracle::rewb_corpus();
  for (int t = 0; t < 1000; ++t) {
    const RewbQuery q = parse_rewb(corpus[t % corpus.size()]);
    const std::string w = testing::random_string(rng, "ab", 0, 10);
    if (const auto wit = oracle::brute_force_match(q, w)) {
      ASSERT_TRUE(oracle::validate_witness(q, w, *wit)) << w;
    }
  }
  const RewbQuery q = parse_rewb("(a)b\\1");
  EXPECT_FALSE(oracle::validate_witness(q, "aba", Witness{"a", 1, 2}));
  EXPECT_FALSE(oracle::validate_witness(q, "aba", Witness{"b", 1, 3}));
}

// match1 against e0 · α · e1 · α · e2 as one pure expression.
TEST(Match1, AgreesWithConcatenatedExpression) {
  std::mt19937_64 rng(103);
  const auto& corpus = oracle::rewb_corpus();
  for (int t = 0; t < 400; ++t) {
    const RewbQuery q = parse_rewb(corpus[t % corpus.size()]);
    const CompiledRewb c = compile_rewb(q);
    const std::string w = testing::random_string(rng, "ab", 2, 12);
    MatchContext ctx(c, w);
    for (const auto& rec : right_maximal_repeats(w)) {
      for (std::size_t k = 1; k <= rec.length; ++k) {
        const std::string alpha(rec.repeat(w).substr(0, k));
        const auto idx = oracle::occurrences(w, alpha);
        const bool want = oracle::ast_accepts(q.e, alpha) &&
                          oracle::ast_accepts(RegexAst::concat({q.e0, RegexAst::text(alpha), q.e1,
                                                                RegexAst::text(alpha), q.e2}),
                                              w);
        ASSERT_EQ(oracle::match1(ctx, alpha, idx), want) << corpus[t % corpus.size()] << " " << w
                                                          << " alpha=" << alpha;
      }
    }
  }
}

TEST(Match1, RejectsAlphaOutsideE) {
  const CompiledRewb c = compile_rewb(parse_rewb("(b)\\1"));
  MatchContext ctx(c, "aa");
  EXPECT_FALSE(oracle::match1(ctx, "a", {1, 2}));
}

TEST(Match1, SquareCase) {
  const CompiledRewb c = compile_rewb(parse_rewb("(ab)\\1"));
  MatchContext yes(c, "abab");
  EXPECT_TRUE(oracle::match1(yes, "ab", {1, 3}));
  MatchContext no(c, "abaab");
  EXPECT_FALSE(oracle::match1(no, "ab", {1, 4}));
}

// A later pending injection must not displace an earlier one.
TEST(Match1, OverlappingOccurrencesKeepPendingInjections) {
  const CompiledRewb c = compile_rewb(parse_rewb("a*(aa)\\1"));
  MatchContext ctx(c, "aaaa");
  EXPECT_TRUE(oracle::match1(ctx, "aa", {1, 2, 3}));
}

TEST(Match2, EmptyMiddleLanguage) {
  const CompiledRewb c = compile_rewb(parse_rewb("(a)[^ab]\\1"), testing::ab_alphabet());
  const std::string w = "aababaab";
  MatchContext ctx(c, w);
  int checked = 0;
  for (const auto& rec : right_maximal_repeats(w)) {
    if (rec.d != 0) continue;
    EXPECT_FALSE(oracle::match2(ctx, rec)) << rec.repeat(w);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Cubic, AgreesWithBruteForce) {
  std::mt19937_64 rng(107);
  const auto& corpus = oracle::rewb_corpus();
  for (int t = 0; t < 2000; ++t) {
    const RewbQuery q = parse_rewb(corpus[t % corpus.size()]);
    const std::string w = testing::random_string(rng, "ab", 0, 12);
    ASSERT_EQ(oracle::cubic_match(q, w).matched, oracle::brute_force_match(q, w).has_value())
        << corpus[t % corpus.size()] << " on " << w;
  }
}

TEST(Cubic, Examples) {
  EXPECT_TRUE(oracle::cubic_match(parse_rewb(testing::kExamplePattern), testing::kExampleSubject).matched);
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_TRUE(oracle::cubic_match(parse_rewb("(a+)\\1"), std::string(n, 'a')).matched ==
                (n % 2 == 0));
    EXPECT_TRUE(oracle::cubic_match(parse_rewb("(a*)\\1"), std::string(n, 'a')).matched ==
                (n % 2 == 0));
  }
}

TEST(Rimp, Examples) {
  EXPECT_EQ(oracle::rimp("mississimiss", "is"), "iss");
  EXPECT_EQ(oracle::rimp("mississimiss", "iss"), "iss");
  EXPECT_EQ(oracle::rimp("mississimiss", "m"), "miss");
  EXPECT_EQ(oracle::rimp("abbabbabbabba", "a"), "a");
  EXPECT_EQ(oracle::rimp("abbabbabbabba", "ab"), "abba");
}

TEST(Rimp, ExtendsToRightMaximalFixpoint) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 200; ++t) {
    const std::string w = testing::random_string(rng, "ab", 2, 16);
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t k = 1; a + k <= w.size(); ++k) {
        const std::string beta = w.substr(a, k);
        if (oracle::occurrences(w, beta).size() < 2) continue;
        const std::string r = oracle::rimp(w, beta);
        ASSERT_EQ(r.substr(0, k), beta);
        ASSERT_TRUE(oracle::is_right_maximal(w, r));
        ASSERT_EQ(oracle::rimp(w, r), r);
        ASSERT_EQ(oracle::occurrences(w, r), oracle::occurrences(w, beta));
      }
    }
  }
}

}  // namespace
}  // namespace rewb
