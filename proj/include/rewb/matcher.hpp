#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rewb/ast.hpp"
#include "rewb/bool_array.hpp"
#include "rewb/nfa.hpp"
#include "rewb/parser.hpp"
#include "rewb/state_set.hpp"
#include "rewb/stringology.hpp"

namespace rewb {

/// Work counters. delta_steps counts every Δ application, one per row for
/// summarized steps, and is the cost measure used by the benchmarks.
struct MatchStats {
  std::uint64_t delta_steps = 0;
  std::uint64_t summary_steps = 0;    // positions advanced by the summarized simulation
  std::uint64_t intmed_steps = 0;     // positions visited by int_med
  std::uint64_t match3b_steps = 0;    // positions visited by match3b
  std::uint64_t pre_alpha_steps = 0;  // e-automaton steps over repeats
  std::uint64_t repeats = 0;          // right-maximal repeats examined

  MatchStats& operator+=(const MatchStats& o);
};

struct MatchVerdict {
  bool matched = false;
  MatchStats stats;
};

struct MatchOptions {
  /// Examine every repeat instead of stopping at the first success. The
  /// verdict is unchanged; the benchmarks use this to measure full work.
  bool exhaustive = false;
};

/// Automata for the four components of a query.
struct CompiledRewb {
  RewbQuery query;
  Alphabet alphabet;
  Nfa e0;
  Nfa e;
  Nfa e1;
  Nfa e2;
  Nfa e2_reversed;
  Nfa e0e1e2;  // for the ε-backreference case
  bool e_accepts_empty = false;
};

CompiledRewb compile_rewb(RewbQuery query, const Alphabet& alphabet = Alphabet());

struct AlphaScan;

/// Hooks called at each acceptance test of match3a / match3b. Used by the
/// invariant tests; production callers leave it unset.
class MatchObserver {
 public:
  virtual ~MatchObserver() = default;
  /// `j` is the 0-based index of i_next in rec.idx.
  virtual void match3a_test(const RepeatRecord& rec, std::size_t j, const SummaryVector& summary,
                            const StateSet& t) {
    (void)rec, (void)j, (void)summary, (void)t;
  }
  virtual void match3b_test(const RepeatRecord& rec, std::size_t j, const StateSet& s) {
    (void)rec, (void)j, (void)s;
  }
};

/// Per-(query, string) state: the subject, the Pre/Suf oracle arrays, and
/// simulation scratch for the e and e1 automata. Positions are 1-based.
class MatchContext {
 public:
  MatchContext(const CompiledRewb& rewb, std::string_view w);

  const CompiledRewb& rewb() const { return *rewb_; }
  std::string_view subject() const { return w_; }
  std::size_t n() const { return w_.size(); }
  unsigned char at(std::size_t pos) const { return static_cast<unsigned char>(w_[pos - 1]); }

  /// pre[i] <=> w[..i] in L(e0), i in [0, n].
  const BoolArray& pre() const { return pre_; }
  /// suf[j] <=> w[j..] in L(e2), j in [1, n+1].
  const BoolArray& suf() const { return suf_; }

  Simulator& e_sim() { return e_sim_; }
  Simulator& e1_sim() { return e1_sim_; }

  MatchStats& counters() { return counters_; }
  MatchStats stats() const;

  MatchObserver* observer = nullptr;

 private:
  const CompiledRewb* rewb_;
  std::string_view w_;
  BoolArray pre_;
  BoolArray suf_;
  Simulator e_sim_;
  Simulator e1_sim_;
  MatchStats counters_;
  std::uint64_t setup_deltas_ = 0;
};

MatchContext build_context(const CompiledRewb& rewb, std::string_view w);

/// pre_alpha[k] <=> alpha[..k] in L(e), k in [1, |alpha|].
BoolArray build_pre_alpha(MatchContext& ctx, std::string_view alpha);

/// A repeat under examination together with its prefix oracle.
struct AlphaScan {
  std::string_view alpha;
  BoolArray pre_alpha;
};

AlphaScan scan_alpha(MatchContext& ctx, std::string_view alpha);

/// T = ⋃_{i∈I} Δ(ecl(q0), w[i+1..i_end]) over the e1 automaton, where
/// I = { i in [i_beg, i_end] | w[i_end-|α|+1..i] in L(e), w[i+1..] in L(e2) }.
/// Requires that i_end ends an occurrence of α and i_end-|α| < i_beg <= i_end.
StateSet int_med(MatchContext& ctx, const AlphaScan& scan, std::size_t i_beg, std::size_t i_end);

/// Separable extendable prefixes: summarized simulation with queued
/// injections, composed with int_med started after the overlap d.
bool match3a(MatchContext& ctx, const RepeatRecord& rec, const AlphaScan& scan);
bool match3a(MatchContext& ctx, const RepeatRecord& rec);

/// Non-separable extendable prefixes: each occurrence is paired only with
/// the rightmost occurrence it overlaps.
bool match3b(MatchContext& ctx, const RepeatRecord& rec, const AlphaScan& scan);
bool match3b(MatchContext& ctx, const RepeatRecord& rec);

bool match_alpha(MatchContext& ctx, const RepeatRecord& rec);

/// Decides w ∈ L(e0 (e) e1 \1 e2) in O(n²m²) time.
MatchVerdict match_rewb(const CompiledRewb& rewb, std::string_view w, MatchOptions options = {});
MatchVerdict match_rewb(const RewbQuery& query, std::string_view w,
                        const Alphabet& alphabet = Alphabet(), MatchOptions options = {});

/// Parses `pattern` with parse_rewb and matches the whole subject.
MatchVerdict match(std::string_view pattern, std::string_view subject,
                   const Alphabet& alphabet = Alphabet());

}  // namespace rewb
