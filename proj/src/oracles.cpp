#include "rewb/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "rewb/check.hpp"

namespace rewb::oracle {
namespace {

using Positions = std::vector<char>;  // Positions[p] != 0 <=> p is reachable, p in [0, |s|]

class Evaluator {
 public:
  Evaluator(std::string_view s, const Alphabet& alphabet) : s_(s), alphabet_(alphabet) {}

  Positions reach(const RegexAst& ast, const Positions& from) const {
    const std::size_t n = s_.size();
    Positions out(n + 1, 0);
    switch (ast.kind) {
      case NodeKind::Empty:
        return from;
      case NodeKind::Literal:
      case NodeKind::AnyChar:
      case NodeKind::Class:
        for (std::size_t p = 0; p < n; ++p) {
          if (from[p] && accepts_char(ast, static_cast<unsigned char>(s_[p]))) out[p + 1] = 1;
        }
        return out;
      case NodeKind::Concat: {
        Positions cur = from;
        for (const auto& c : ast.children) cur = reach(c, cur);
        return cur;
      }
      case NodeKind::Alternation:
        for (const auto& c : ast.children) merge(out, reach(c, from));
        return out;
      case NodeKind::Optional:
        out = from;
        merge(out, reach(ast.children.front(), from));
        return out;
      case NodeKind::Star:
        return star(ast.children.front(), from);
      case NodeKind::Plus:
        return star(ast.children.front(), reach(ast.children.front(), from));
    }
    return out;
  }

 private:
  bool accepts_char(const RegexAst& ast, unsigned char c) const {
    // The alphabet only bounds `.` and negated classes.
    switch (ast.kind) {
      case NodeKind::Literal:
        return ast.literal == c;
      case NodeKind::AnyChar:
        return alphabet_.contains(c);
      case NodeKind::Class:
        return ast.negated ? alphabet_.contains(c) && !ast.chars.test(c) : ast.chars.test(c);
      default:
        return false;
    }
  }

  static bool merge(Positions& into, const Positions& from) {
    bool grew = false;
    for (std::size_t p = 0; p < into.size(); ++p) {
      if (from[p] && !into[p]) {
        into[p] = 1;
        grew = true;
      }
    }
    return grew;
  }

  Positions star(const RegexAst& body, const Positions& from) const {
    Positions all = from;
    Positions frontier = from;
    for (;;) {
      Positions next = reach(body, frontier);
      Positions fresh(next.size(), 0);
      bool any = false;
      for (std::size_t p = 0; p < next.size(); ++p) {
        if (next[p] && !all[p]) {
          fresh[p] = all[p] = 1;
          any = true;
        }
      }
      if (!any) return all;
      frontier = std::move(fresh);
    }
  }

  std::string_view s_;
  const Alphabet& alphabet_;
};

}  // namespace

bool ast_accepts(const RegexAst& ast, std::string_view s, const Alphabet& alphabet) {
  Positions from(s.size() + 1, 0);
  from[0] = 1;
  return Evaluator(s, alphabet).reach(ast, from)[s.size()] != 0;
}

std::optional<Witness> brute_force_match(const RewbQuery& q, std::string_view w,
                                         const Alphabet& alphabet) {
  const std::size_t n = w.size();
  auto in = [&](const RegexAst& e, std::size_t pos, std::size_t len) {
    return ast_accepts(e, w.substr(pos, len), alphabet);
  };
  // Nonempty beta: copies at 0-based a and b with a + k <= b.
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    for (std::size_t a = 0; a + 2 * k <= n; ++a) {
      if (!in(q.e0, 0, a) || !in(q.e, a, k)) continue;
      for (std::size_t b = a + k; b + k <= n; ++b) {
        if (w.compare(a, k, w, b, k) != 0) continue;
        if (in(q.e1, a + k, b - a - k) && in(q.e2, b + k, n - b - k)) {
          return Witness{std::string(w.substr(a, k)), a + 1, b + 1};
        }
      }
    }
  }
  if (ast_accepts(q.e, "", alphabet)) {
    for (std::size_t a = 0; a <= n; ++a) {
      if (!in(q.e0, 0, a)) continue;
      for (std::size_t b = a; b <= n; ++b) {
        if (in(q.e1, a, b - a) && in(q.e2, b, n - b)) return Witness{"", a + 1, b + 1};
      }
    }
  }
  return std::nullopt;
}

bool validate_witness(const RewbQuery& q, std::string_view w, const Witness& wit,
                      const Alphabet& alphabet) {
  const std::size_t k = wit.beta.size();
  if (wit.i < 1 || wit.i + k > wit.j || wit.j - 1 + k > w.size()) return false;
  if (w.substr(wit.i - 1, k) != wit.beta || w.substr(wit.j - 1, k) != wit.beta) return false;
  return ast_accepts(q.e0, wit.w0(w), alphabet) && ast_accepts(q.e, wit.beta, alphabet) &&
         ast_accepts(q.e1, wit.w1(w), alphabet) && ast_accepts(q.e2, wit.w2(w), alphabet);
}

bool match1(MatchContext& ctx, std::string_view alpha, const std::vector<std::size_t>& idx) {
  Simulator& e_sim = ctx.e_sim();
  {
    StateSet cur = e_sim.initial_closure();
    StateSet next(e_sim.nfa().size());
    for (char c : alpha) {
      e_sim.step(cur.words(), static_cast<unsigned char>(c), next.words());
      std::swap(cur, next);
    }
    if (!cur.intersects(e_sim.nfa().accepting())) return false;
  }

  Simulator& sim = ctx.e1_sim();
  const Nfa& e1 = sim.nfa();
  const std::size_t len = alpha.size();
  StateSet s(e1.size());
  StateSet next(e1.size());
  std::deque<std::size_t> que;
  bool started = false;
  std::size_t i_prev = 0;
  for (std::size_t i_next : idx) {
    if (started) {
      for (std::size_t i = i_prev; i < i_next; ++i) {
        if (!s.empty()) {
          sim.step(s.words(), ctx.at(i), next.words());
          std::swap(s, next);
        }
        if (!que.empty() && que.front() == i) {
          s |= sim.initial_closure();
          que.pop_front();
        }
      }
      if (s.intersects(e1.accepting()) && ctx.suf()[i_next + len]) return true;
    }
    i_prev = i_next;
    if (ctx.pre()[i_prev - 1]) {
      started = true;
      que.push_back(i_prev + len - 1);
    }
  }
  return false;
}

bool match2(MatchContext& ctx, const RepeatRecord& rec) {
  REWB_CHECK(max_overlap(rec) == 0);
  const AlphaScan scan = scan_alpha(ctx, rec.repeat(ctx.subject()));
  Simulator& sim = ctx.e1_sim();
  const Nfa& e1 = sim.nfa();
  SummaryVector summary(e1.size());
  bool have_que = false;
  std::size_t i_que = 0;
  std::size_t i_prev = 0;
  for (std::size_t i_next : rec.idx) {
    if (have_que) {
      for (std::size_t i = i_prev; i < i_next; ++i) {
        if (!summary.all_empty()) sim.step_summary(summary, ctx.at(i));
        if (i == i_que) summary.inject_diagonal();
      }
      const StateSet t = int_med(ctx, scan, i_next, i_next + rec.length - 1);
      for (StateId l : t.members()) {
        if (simd::intersects(summary.row(l), e1.accepting().words())) return true;
      }
    }
    i_prev = i_next;
    if (ctx.pre()[i_prev - 1]) {
      have_que = true;
      i_que = i_prev + rec.length - 1;
    }
  }
  return false;
}

MatchVerdict cubic_match(const CompiledRewb& rewb, std::string_view w, MatchOptions options) {
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
    const std::string_view alpha = rec.repeat(w);
    for (std::size_t k = 1; k <= rec.length; ++k) {
      ++ctx.counters().repeats;
      if (match1(ctx, alpha.substr(0, k), rec.idx)) {
        verdict.matched = true;
        if (!options.exhaustive) return false;
      }
    }
    return true;
  });
  verdict.stats = ctx.stats();
  verdict.stats.delta_steps += eps_deltas;
  return verdict;
}

MatchVerdict cubic_match(const RewbQuery& q, std::string_view w, const Alphabet& alphabet,
                         MatchOptions options) {
  return cubic_match(compile_rewb(q, alphabet), w, options);
}

const std::vector<std::string>& rewb_corpus() {
  static const std::vector<std::string> corpus = {
      "a*(?:ba*)?(?:ba*)?((?:a|b)*)a*ba*ba*ba*(?:ba*ba*)*\\1(?:(?:a|b)(?:a|b))*",
      "a*(?:ba*)?(?:ba*)?((?:a|b)+)a*ba*ba*ba*(?:ba*ba*)*\\1(?:(?:a|b)(?:a|b))*",
      "a*(?:ba*)?(?:ba*)?((?:a|b)*a)a*ba*ba*ba*(?:ba*ba*)*\\1(?:(?:a|b)(?:a|b))*",
      "((?:a|b)+)\\1",
      "((?:a|b)*)\\1",
      "(a)b\\1",
      "((?:ab)+a?)x?\\1",
      "(?:a|b)*((?:a|b)+)(?:a|b)*\\1(?:a|b)*",
      "(a*)\\1",
      "(a*)b\\1",
      "b*(a+)b+\\1b*",
      "((?:a|b)*)b\\1a",
      "(?:a|b)*(ab*)\\1(?:a|b)*",
      "a?((?:ba)*)(?:b|aa)*\\1",
      "((?:a|b)(?:a|b))(?:a|b)*\\1",
      "(b*)a(?:a|b)*a\\1",
      "(?:ab)*((?:a|b)*b)(?:a|b)\\1(?:a|b)?",
      "(a?)\\1b*",
      "(?:a|b)*((?:aa|bb)+)a*\\1",
      "(.)(?:a|b)*\\1",
      "([ab]+)[^a]*\\1",
      "(a|b)\\1(?:a|b)",
      "a*((?:b|ab)*)(?:aab|b)*\\1(?:a|b)*b",
      "((?:a|b)*)(?:a|b)\\1(?:ab|ba)*",
  };
  return corpus;
}

std::vector<std::size_t> occurrences(std::string_view w, std::string_view s) {
  std::vector<std::size_t> out;
  if (s.empty() || s.size() > w.size()) return out;
  for (std::size_t p = 0; p + s.size() <= w.size(); ++p) {
    if (w.compare(p, s.size(), s) == 0) out.push_back(p + 1);
  }
  return out;
}

bool is_right_maximal(std::string_view w, std::string_view s) {
  const auto occ = occurrences(w, s);
  if (occ.size() < 2) return false;
  // Distinct right contexts, with the end of w as its own symbol (-1).
  std::vector<int> next;
  for (std::size_t p : occ) {
    const std::size_t after = p - 1 + s.size();
    next.push_back(after < w.size() ? static_cast<unsigned char>(w[after]) : -1);
  }
  return std::any_of(next.begin(), next.end(), [&](int c) { return c != next.front(); }) ||
         std::count(next.begin(), next.end(), -1) > 0;
}

std::string rimp(std::string_view w, std::string_view beta) {
  REWB_CHECK(occurrences(w, beta).size() >= 2);
  std::string cur(beta);
  while (!is_right_maximal(w, cur)) {
    const std::size_t p = occurrences(w, cur).front();
    cur.push_back(w[p - 1 + cur.size()]);
  }
  return cur;
}

std::vector<RepeatRecord> naive_right_maximal_repeats(std::string_view w) {
  std::map<std::string, std::vector<std::size_t>> found;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t k = 1; a + k <= w.size(); ++k) {
      std::string s(w.substr(a, k));
      if (found.count(s) || !is_right_maximal(w, s)) continue;
      found.emplace(s, occurrences(w, s));
    }
  }
  std::vector<RepeatRecord> out;
  for (auto& [s, idx] : found) {
    RepeatRecord rec;
    rec.length = s.size();
    rec.idx = std::move(idx);
    rec.d = max_overlap(rec);
    rec.fwd = forward_map(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

SuffixIndex naive_suffix_index(std::string_view w) {
  const std::size_t n = w.size() + 1;
  std::vector<std::size_t> sa(n);
  for (std::size_t r = 0; r < n; ++r) sa[r] = r + 1;
  // The sentinel suffix (empty) sorts first; string_view ordering does the rest.
  auto suffix = [&](std::size_t p) { return w.substr(p - 1); };
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return suffix(a) < suffix(b); });
  std::vector<std::size_t> lcp(n, 0);
  for (std::size_t r = 1; r < n; ++r) {
    const auto x = suffix(sa[r - 1]);
    const auto y = suffix(sa[r]);
    std::size_t h = 0;
    while (h < x.size() && h < y.size() && x[h] == y[h]) ++h;
    lcp[r] = h;
  }
  return SuffixIndex{std::move(sa), std::move(lcp)};
}

}  // namespace rewb::oracle
