#pragma once

// Slow, independent implementations used as ground truth by tests, the
// `check` subcommand and the cubic benchmark baseline.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rewb/ast.hpp"
#include "rewb/matcher.hpp"
#include "rewb/parser.hpp"
#include "rewb/stringology.hpp"

namespace rewb::oracle {

/// Membership by direct evaluation of the AST over sets of end positions.
/// Shares no code with the automaton path.
bool ast_accepts(const RegexAst& ast, std::string_view s, const Alphabet& alphabet = Alphabet());

/// Decomposition w = w0 · beta · w1 · beta · w2. Positions are 1-based;
/// i and j are the starts of the two copies (i + |beta| <= j).
struct Witness {
  std::string beta;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string_view w0(std::string_view w) const { return w.substr(0, i - 1); }
  std::string_view w1(std::string_view w) const {
    return w.substr(i - 1 + beta.size(), j - i - beta.size());
  }
  std::string_view w2(std::string_view w) const { return w.substr(j - 1 + beta.size()); }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Enumerates every (i, |beta|, j) including |beta| = 0 and tests the four
/// components with ast_accepts. Cubic in |w| times the membership cost.
std::optional<Witness> brute_force_match(const RewbQuery& q, std::string_view w,
                                         const Alphabet& alphabet = Alphabet());

/// Segment-by-segment validation of a witness.
bool validate_witness(const RewbQuery& q, std::string_view w, const Witness& wit,
                      const Alphabet& alphabet = Alphabet());

/// Decides e0·alpha·e1·alpha·e2 over the occurrence positions `idx` of
/// alpha. Pending injections are kept in a FIFO so overlapping occurrences
/// are handled; for non-overlapping idx this is the single-slot version.
bool match1(MatchContext& ctx, std::string_view alpha, const std::vector<std::size_t>& idx);

/// The d = 0 algorithm: summarized simulation with a single pending
/// injection, composed with int_med from the start of each occurrence.
bool match2(MatchContext& ctx, const RepeatRecord& rec);

/// Runs match1 on every length-k prefix of every right-maximal repeat with
/// that repeat's occurrence array, after the ε check. Every repeat's
/// occurrence array equals that of its right-maximal extension, so this
/// covers all repeats. With `exhaustive` it never short-circuits.
MatchVerdict cubic_match(const CompiledRewb& rewb, std::string_view w, MatchOptions options = {});
MatchVerdict cubic_match(const RewbQuery& q, std::string_view w,
                         const Alphabet& alphabet = Alphabet(), MatchOptions options = {});

/// Rewb patterns over {a, b} used by the agreement suites. The first
/// entry is the running three-component instance (at most two b's, Σ*,
/// at least three and an odd number of b's, even length).
const std::vector<std::string>& rewb_corpus();

/// 1-based start positions of every occurrence of `s` in `w`.
std::vector<std::size_t> occurrences(std::string_view w, std::string_view s);

/// Right-maximality by definition; an occurrence at the right end of w
/// counts as having a unique right-adjacent character.
bool is_right_maximal(std::string_view w, std::string_view s);

/// Extends a repeat while all its occurrences share the right-adjacent
/// character.
std::string rimp(std::string_view w, std::string_view beta);

/// All right-maximal repeats with their occurrence arrays, sorted by
/// (repeat, idx). Quadratic number of candidates, each scanned naively.
std::vector<RepeatRecord> naive_right_maximal_repeats(std::string_view w);

/// Suffix array (1-based positions, sentinel first) and LCP by direct
/// comparison sort.
SuffixIndex naive_suffix_index(std::string_view w);

}  // namespace rewb::oracle
