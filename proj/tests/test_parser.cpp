#include <gtest/gtest.h>

#include <random>
#include <string>

#include "rewb/oracles.hpp"
#include "rewb/parser.hpp"
#include "test_support.hpp"

namespace rewb {
namespace {

using oracle::ast_accepts;
using testing::all_strings;
using testing::count_b;

TEST(Parser, AtMostTwoBsByCounting) {
  const RegexAst ast = parse_regex(testing::kAtMostTwoB);
  for (const auto& s : all_strings("ab", 6)) {
    EXPECT_EQ(ast_accepts(ast, s), count_b(s) <= 2) << s;
  }
}

TEST(Parser, RunningInstanceComponents) {
  const RewbQuery q = parse_rewb(testing::kExamplePattern);
  for (const auto& s : all_strings("ab", 8)) {
    EXPECT_EQ(ast_accepts(q.e0, s), count_b(s) <= 2) << s;
    EXPECT_TRUE(ast_accepts(q.e, s)) << s;
    EXPECT_EQ(ast_accepts(q.e1, s), count_b(s) >= 3 && count_b(s) % 2 == 1) << s;
    EXPECT_EQ(ast_accepts(q.e2, s), s.size() % 2 == 0) << s;
  }
}

TEST(Parser, SplitsComponentsAroundCaptureAndReference) {
  const RewbQuery q = parse_rewb("x(ab)c\\1d");
  EXPECT_EQ(q.e0, RegexAst::lit('x'));
  EXPECT_EQ(q.e, RegexAst::text("ab"));
  EXPECT_EQ(q.e1, RegexAst::lit('c'));
  EXPECT_EQ(q.e2, RegexAst::lit('d'));

  const RewbQuery bare = parse_rewb("(a)\\1");
  EXPECT_EQ(bare.e0, RegexAst::empty());
  EXPECT_EQ(bare.e1, RegexAst::empty());
  EXPECT_EQ(bare.e2, RegexAst::empty());
  EXPECT_EQ(bare.m(), 4u + 2u);  // three Empty components and one literal
}

TEST(Parser, NonCapturingGroupsInsideComponents) {
  const RewbQuery q = parse_rewb("(?:a|b)*((?:ab)+)(?:x|y)?\\1");
  EXPECT_TRUE(ast_accepts(q.e0, "abba"));
  EXPECT_TRUE(ast_accepts(q.e, "abab"));
  EXPECT_FALSE(ast_accepts(q.e, "aba"));
  EXPECT_TRUE(ast_accepts(q.e1, ""));
  EXPECT_TRUE(ast_accepts(q.e1, "y"));
}

TEST(Parser, EscapesAndClasses) {
  EXPECT_EQ(parse_regex("\\."), RegexAst::lit('.'));
  EXPECT_EQ(parse_regex("\\x41"), RegexAst::lit('A'));
  EXPECT_EQ(parse_regex("\\n"), RegexAst::lit('\n'));
  const RegexAst cls = parse_regex("[]a-c]");
  EXPECT_TRUE(ast_accepts(cls, "]"));
  EXPECT_TRUE(ast_accepts(cls, "b"));
  EXPECT_FALSE(ast_accepts(cls, "d"));
  const RegexAst neg = parse_regex("[^a]");
  EXPECT_FALSE(ast_accepts(neg, "a"));
  EXPECT_TRUE(ast_accepts(neg, "b"));
  EXPECT_FALSE(ast_accepts(neg, "c", testing::ab_alphabet()));
}

TEST(Parser, DotFollowsAlphabet) {
  const RegexAst dot = parse_regex(".");
  EXPECT_TRUE(ast_accepts(dot, "c"));
  EXPECT_FALSE(ast_accepts(dot, "c", testing::ab_alphabet()));
  EXPECT_FALSE(ast_accepts(dot, "\x01"));
  EXPECT_TRUE(ast_accepts(dot, "\x01", Alphabet::all_bytes()));
}

TEST(Parser, EmptyAlternativesAndGroups) {
  const RegexAst ast = parse_regex("a(?:)|");
  EXPECT_TRUE(ast_accepts(ast, ""));
  EXPECT_TRUE(ast_accepts(ast, "a"));
  EXPECT_FALSE(ast_accepts(ast, "aa"));
}

struct BadPattern {
  const char* text;
  std::size_t position;
};

class PatternErrors : public ::testing::TestWithParam<BadPattern> {};

TEST_P(PatternErrors, ReportsPosition) {
  try {
    parse_regex(GetParam().text);
    FAIL() << "accepted " << GetParam().text;
  } catch (const PatternError& e) {
    EXPECT_EQ(e.position(), GetParam().position) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(Parser, PatternErrors,
                         ::testing::Values(BadPattern{"*a", 0}, BadPattern{"a**", 2},
                                           BadPattern{"(a", 0}, BadPattern{"a)", 1},
                                           BadPattern{"a{2}", 1}, BadPattern{"^a", 0},
                                           BadPattern{"a$", 1}, BadPattern{"\\d", 0},
                                           BadPattern{"[b-a]", 1}, BadPattern{"[ab", 0},
                                           BadPattern{"a\\", 1}, BadPattern{"\\x4", 0},
                                           BadPattern{"(?=a)", 1}));

TEST(Parser, PureRegexRejectsCaptureAndReference) {
  EXPECT_THROW(parse_regex("(a)"), PatternError);
  EXPECT_THROW(parse_regex("a\\1"), PatternError);
}

TEST(Parser, RewbFormViolations) {
  for (const char* text : {"ab", "(a)b", "(a)(b)\\1", "(a)\\1\\1", "a\\1", "(a)*\\1", "(a)\\1*",
                           "\\1(a)", "(a)|\\1", "(a|(b))\\1", "(a\\1)", "(a)\\2",
                           "(?:(a)b)*\\1"}) {
    EXPECT_THROW(parse_rewb(text), RewbFormError) << text;
  }
}

TEST(Parser, RewbSyntaxErrorsStayPatternErrors) {
  EXPECT_THROW(parse_rewb("(a)\\1{2}"), PatternError);
  EXPECT_THROW(parse_rewb("(a\\1"), PatternError);
}

TEST(Parser, PrintThenParseRoundTrips) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const RegexAst ast = testing::random_ast(rng, 4);
    const std::string text = to_pattern(ast);
    EXPECT_EQ(parse_regex(text), ast) << text;
  }
  const RewbQuery q = parse_rewb(testing::kExamplePattern);
  const RewbQuery again = parse_rewb(to_pattern(q));
  EXPECT_EQ(again.e0, q.e0);
  EXPECT_EQ(again.e, q.e);
  EXPECT_EQ(again.e1, q.e1);
  EXPECT_EQ(again.e2, q.e2);
}

TEST(Parser, PrintsMetacharactersEscaped) {
  const RegexAst ast = RegexAst::text("a.b*(\x01");
  EXPECT_EQ(parse_regex(to_pattern(ast)), ast);
}

TEST(Reverse, IsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const RegexAst ast = testing::random_ast(rng, 4);
    EXPECT_EQ(reverse_ast(reverse_ast(ast)), ast);
  }
}

TEST(Reverse, AcceptsReversedStrings) {
  std::mt19937_64 rng(13);
  const auto strings = all_strings("ab", 6);
  for (int t = 0; t < 100; ++t) {
    const RegexAst ast = testing::random_ast(rng, 3);
    const RegexAst rev = reverse_ast(ast);
    for (const auto& s : strings) {
      const std::string r(s.rbegin(), s.rend());
      ASSERT_EQ(ast_accepts(rev, r), ast_accepts(ast, s)) << to_pattern(ast) << " on " << s;
    }
  }
}

TEST(Reverse, RunningInstanceMiddleComponent) {
  const RewbQuery q = parse_rewb(testing::kExamplePattern);
  const RegexAst rev = reverse_ast(q.e1);
  const std::string_view w = testing::kExampleSubject;
  const std::string mid(w.substr(2, 8));  // w[3..10]
  EXPECT_TRUE(ast_accepts(rev, std::string(mid.rbegin(), mid.rend())));
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t len = 0; a + len <= w.size(); ++len) {
      const std::string sub(w.substr(a, len));
      EXPECT_EQ(ast_accepts(rev, std::string(sub.rbegin(), sub.rend())), ast_accepts(q.e1, sub));
    }
  }
}

TEST(AlphabetSpec, Forms) {
  EXPECT_EQ(Alphabet::from_spec("printable"), Alphabet::printable_ascii());
  EXPECT_EQ(Alphabet::from_spec("bytes"), Alphabet::all_bytes());
  const Alphabet ab = Alphabet::from_spec("ab");
  EXPECT_TRUE(ab.contains('a'));
  EXPECT_FALSE(ab.contains('c'));
  EXPECT_TRUE(Alphabet::from_spec("a-z").contains('q'));
  EXPECT_THROW(Alphabet::from_spec("z-a"), PatternError);
}

}  // namespace
}  // namespace rewb
