#include "rewb/matcher.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "rewb/check.hpp"

namespace rewb {

MatchStats& MatchStats::operator+=(const MatchStats& o) {
  delta_steps += o.delta_steps;
  summary_steps += o.summary_steps;
  intmed_steps += o.intmed_steps;
  match3b_steps += o.match3b_steps;
  pre_alpha_steps += o.pre_alpha_steps;
  repeats += o.repeats;
  return *this;
}

CompiledRewb compile_rewb(RewbQuery query, const Alphabet& alphabet) {
  CompiledRewb c;
  c.alphabet = alphabet;
  c.e0 = compile(query.e0, alphabet);
  c.e = compile(query.e, alphabet);
  c.e1 = compile(query.e1, alphabet);
  c.e2 = compile(query.e2, alphabet);
  c.e2_reversed = compile(reverse_ast(query.e2), alphabet);
  c.e0e1e2 = compile(RegexAst::concat({query.e0, query.e1, query.e2}), alphabet);
  c.e_accepts_empty = accepts(c.e, "");
  c.query = std::move(query);
  return c;
}

MatchContext::MatchContext(const CompiledRewb& rewb, std::string_view w)
    : rewb_(&rewb), w_(w), pre_(prefix_acceptance(rewb.e0, w)), suf_(1, w.size() + 1),
      e_sim_(rewb.e), e1_sim_(rewb.e1) {
  // Suffixes of w in L(e2) are prefixes of reverse(w) in L(reverse(e2)).
  const std::string rev(w.rbegin(), w.rend());
  const BoolArray rev_pre = prefix_acceptance(rewb.e2_reversed, rev);
  for (std::size_t j = 1; j <= w.size() + 1; ++j) suf_.set(j, rev_pre[w.size() + 1 - j]);
  setup_deltas_ = 2 * w.size();
}

MatchStats MatchContext::stats() const {
  MatchStats s = counters_;
  s.delta_steps = setup_deltas_ + e_sim_.delta_count() + e1_sim_.delta_count();
  return s;
}

MatchContext build_context(const CompiledRewb& rewb, std::string_view w) {
  return MatchContext(rewb, w);
}

BoolArray build_pre_alpha(MatchContext& ctx, std::string_view alpha) {
  REWB_CHECK(!alpha.empty());
  Simulator& sim = ctx.e_sim();
  const Nfa& nfa = sim.nfa();
  BoolArray out(1, alpha.size());
  StateSet cur = sim.initial_closure();
  StateSet next(nfa.size());
  for (std::size_t k = 1; k <= alpha.size(); ++k) {
    sim.step(cur.words(), static_cast<unsigned char>(alpha[k - 1]), next.words());
    std::swap(cur, next);
    out.set(k, cur.intersects(nfa.accepting()));
    ++ctx.counters().pre_alpha_steps;
  }
  return out;
}

AlphaScan scan_alpha(MatchContext& ctx, std::string_view alpha) {
  return AlphaScan{alpha, build_pre_alpha(ctx, alpha)};
}

StateSet int_med(MatchContext& ctx, const AlphaScan& scan, std::size_t i_beg, std::size_t i_end) {
  const std::size_t len = scan.alpha.size();
  REWB_CHECK(i_end >= len && i_end <= ctx.n());
  REWB_CHECK(i_end - len < i_beg && i_beg <= i_end);
  Simulator& sim = ctx.e1_sim();
  const StateSet& start = sim.initial_closure();
  StateSet t(sim.nfa().size());
  StateSet next(sim.nfa().size());
  const std::size_t base = i_end - len;
  for (std::size_t i = i_beg; i <= i_end; ++i) {
    ++ctx.counters().intmed_steps;
    if (scan.pre_alpha[i - base] && ctx.suf()[i + 1]) t |= start;
    if (i < i_end && !t.empty()) {
      sim.step(t.words(), ctx.at(i + 1), next.words());
      std::swap(t, next);
    }
  }
  return t;
}

bool match3a(MatchContext& ctx, const RepeatRecord& rec, const AlphaScan& scan) {
  const std::size_t len = rec.length;
  Simulator& sim = ctx.e1_sim();
  const Nfa& e1 = sim.nfa();
  SummaryVector summary(e1.size());
  std::deque<std::size_t> que;
  bool started = false;
  std::size_t i_prev = 0;

  for (std::size_t j = 0; j < rec.idx.size(); ++j) {
    const std::size_t i_next = rec.idx[j];
    if (started) {
      for (std::size_t i = i_prev; i < i_next; ++i) {
        if (!summary.all_empty()) {
          sim.step_summary(summary, ctx.at(i));
          ++ctx.counters().summary_steps;
        }
        if (!que.empty() && que.front() == i) {
          summary.inject_diagonal();
          que.pop_front();
        }
      }
      const StateSet t = int_med(ctx, scan, i_next + rec.d, i_next + len - 1);
      if (ctx.observer) ctx.observer->match3a_test(rec, j, summary, t);
      bool hit = false;
      for_each_bit(t.words(), [&](StateId l) {
        if (!hit && simd::intersects(summary.row(l), e1.accepting().words())) hit = true;
      });
      if (hit) return true;
    }
    i_prev = i_next;
    if (ctx.pre()[i_prev - 1]) {
      started = true;
      que.push_back(i_prev + len - 1);
    }
  }
  return false;
}

bool match3a(MatchContext& ctx, const RepeatRecord& rec) {
  return match3a(ctx, rec, scan_alpha(ctx, rec.repeat(ctx.subject())));
}

bool match3b(MatchContext& ctx, const RepeatRecord& rec, const AlphaScan& scan) {
  const std::vector<std::size_t> computed = rec.fwd.empty() ? forward_map(rec) : std::vector<std::size_t>{};
  const std::vector<std::size_t>& fwd = rec.fwd.empty() ? computed : rec.fwd;
  Simulator& sim = ctx.e1_sim();
  const Nfa& e1 = sim.nfa();
  StateSet s(e1.size());
  StateSet next(e1.size());
  std::size_t f_prev = 0;

  for (std::size_t j = 0; j < rec.idx.size(); ++j) {
    const std::size_t i_next = rec.idx[j];
    const std::size_t f_next = fwd[j];
    if (i_next < f_next && ctx.pre()[i_next - 1] && f_prev < f_next) {
      s.clear();
      for (std::size_t i = std::max(i_next, f_prev); i < f_next; ++i) {
        ++ctx.counters().match3b_steps;
        // β = w[i_next..i]; its second copy ends at f_next + i - i_next.
        if (scan.pre_alpha[i - i_next + 1] && ctx.suf()[f_next + i - i_next + 1]) {
          s |= sim.initial_closure();
        }
        if (i + 1 < f_next && !s.empty()) {
          sim.step(s.words(), ctx.at(i + 1), next.words());
          std::swap(s, next);
        }
      }
      if (ctx.observer) ctx.observer->match3b_test(rec, j, s);
      if (s.intersects(e1.accepting())) return true;
    }
    f_prev = f_next;
  }
  return false;
}

bool match3b(MatchContext& ctx, const RepeatRecord& rec) {
  return match3b(ctx, rec, scan_alpha(ctx, rec.repeat(ctx.subject())));
}

bool match_alpha(MatchContext& ctx, const RepeatRecord& rec) {
  const AlphaScan scan = scan_alpha(ctx, rec.repeat(ctx.subject()));
  return match3a(ctx, rec, scan) || match3b(ctx, rec, scan);
}

MatchVerdict match_rewb(const CompiledRewb& rewb, std::string_view w, MatchOptions options) {
  MatchVerdict verdict;
  std::uint64_t eps_deltas = 0;
  if (rewb.e_accepts_empty) {
    eps_deltas = w.size();
    if (accepts(rewb.e0e1e2, w)) {
      verdict.matched = true;
      if (!options.exhaustive) {
        verdict.stats.delta_steps = eps_deltas;
        return verdict;
      }
    }
  }
  MatchContext ctx(rewb, w);
  enum_right_maximal_repeats(w, [&](const RepeatRecord& rec) {
    ++ctx.counters().repeats;
    if (match_alpha(ctx, rec)) {
      verdict.matched = true;
      return options.exhaustive;
    }
    return true;
  });
  verdict.stats = ctx.stats();
  verdict.stats.delta_steps += eps_deltas;
  return verdict;
}

MatchVerdict match_rewb(const RewbQuery& query, std::string_view w, const Alphabet& alphabet,
                        MatchOptions options) {
  return match_rewb(compile_rewb(query, alphabet), w, options);
}

MatchVerdict match(std::string_view pattern, std::string_view subject, const Alphabet& alphabet) {
  return match_rewb(parse_rewb(pattern), subject, alphabet);
}

}  // namespace rewb
