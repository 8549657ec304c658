#include "rewb/nfa.hpp"

#include <algorithm>

namespace rewb {

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& s : states_) n += s.eps.size() + (s.has_char ? 1 : 0);
  return n;
}

class NfaBuilder {
 public:
  explicit NfaBuilder(const Alphabet& alphabet) : alphabet_(alphabet) {}

  Nfa build(const RegexAst& ast) {
    Fragment f = emit(ast);
    Nfa nfa;
    nfa.states_ = std::move(states_);
    nfa.initial_ = f.start;
    nfa.accept_ = f.accept;
    nfa.accepting_ = StateSet(nfa.states_.size(), {f.accept});
    return nfa;
  }

 private:
  struct Fragment {
    StateId start;
    StateId accept;
  };

  StateId fresh() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }

  void eps(StateId from, StateId to) { states_[from].eps.push_back(to); }

  Fragment char_edge(const CharSet& on) {
    Fragment f{fresh(), fresh()};
    auto& s = states_[f.start];
    s.has_char = true;
    s.on = on;
    s.target = f.accept;
    return f;
  }

  Fragment emit(const RegexAst& ast) {
    switch (ast.kind) {
      case NodeKind::Empty: {
        Fragment f{fresh(), fresh()};
        eps(f.start, f.accept);
        return f;
      }
      case NodeKind::Literal: {
        CharSet cs;
        cs.set(ast.literal);
        return char_edge(cs);
      }
      case NodeKind::AnyChar:
        return char_edge(alphabet_.chars());
      case NodeKind::Class:
        return char_edge(ast.negated ? alphabet_.chars() & ~ast.chars : ast.chars);
      case NodeKind::Concat: {
        Fragment f{fresh(), fresh()};
        StateId tail = f.start;
        for (const auto& c : ast.children) {
          Fragment part = emit(c);
          eps(tail, part.start);
          tail = part.accept;
        }
        eps(tail, f.accept);
        return f;
      }
      case NodeKind::Alternation: {
        Fragment f{fresh(), fresh()};
        for (const auto& c : ast.children) {
          Fragment part = emit(c);
          eps(f.start, part.start);
          eps(part.accept, f.accept);
        }
        return f;
      }
      case NodeKind::Star:
      case NodeKind::Plus:
      case NodeKind::Optional: {
        Fragment f{fresh(), fresh()};
        Fragment body = emit(ast.children.front());
        eps(f.start, body.start);
        if (ast.kind != NodeKind::Plus) eps(f.start, f.accept);
        if (ast.kind != NodeKind::Optional) eps(body.accept, body.start);
        eps(body.accept, f.accept);
        return f;
      }
    }
    return {0, 0};
  }

  const Alphabet& alphabet_;
  std::vector<NfaState> states_;
};

Nfa compile(const RegexAst& ast, const Alphabet& alphabet) {
  return NfaBuilder(alphabet).build(ast);
}

Simulator::Simulator(const Nfa& nfa)
    : nfa_(&nfa), initial_closure_(nfa.size()), row_scratch_(words_for(nfa.size())) {
  stack_.reserve(nfa.size());
  initial_closure_.insert(nfa.initial());
  close(initial_closure_.words());
}

void Simulator::close(std::span<Word> set) {
  stack_.clear();
  for_each_bit(set, [&](StateId q) { stack_.push_back(q); });
  while (!stack_.empty()) {
    StateId q = stack_.back();
    stack_.pop_back();
    for (StateId t : nfa_->state(q).eps) {
      if (!test_bit(set, t)) {
        set_bit(set, t);
        stack_.push_back(t);
      }
    }
  }
}

void Simulator::step(std::span<const Word> from, unsigned char a, std::span<Word> to) {
  ++delta_count_;
  std::fill(to.begin(), to.end(), Word{0});
  stack_.clear();
  for_each_bit(from, [&](StateId q) {
    const NfaState& s = nfa_->state(q);
    if (s.has_char && s.on[a] && !test_bit(to, s.target)) {
      set_bit(to, s.target);
      stack_.push_back(s.target);
    }
  });
  while (!stack_.empty()) {
    StateId q = stack_.back();
    stack_.pop_back();
    for (StateId t : nfa_->state(q).eps) {
      if (!test_bit(to, t)) {
        set_bit(to, t);
        stack_.push_back(t);
      }
    }
  }
}

std::size_t Simulator::step_summary(SummaryVector& v, unsigned char a) {
  std::size_t stepped = 0;
  std::span<Word> scratch(row_scratch_);
  for (std::size_t l = 0; l < v.size(); ++l) {
    auto row = v.row(l);
    if (!simd::any(row)) continue;
    step(row, a, scratch);
    std::copy(scratch.begin(), scratch.end(), row.begin());
    ++stepped;
  }
  return stepped;
}

StateSet eps_closure(const Nfa& nfa, const StateSet& s) {
  Simulator sim(nfa);
  StateSet out = s;
  sim.close(out.words());
  return out;
}

StateSet step(const Nfa& nfa, const StateSet& s, unsigned char a) {
  Simulator sim(nfa);
  StateSet out(nfa.size());
  sim.step(s.words(), a, out.words());
  return out;
}

StateSet run(const Nfa& nfa, std::string_view u, const StateSet& start) {
  Simulator sim(nfa);
  StateSet cur = start;
  StateSet next(nfa.size());
  for (char c : u) {
    sim.step(cur.words(), static_cast<unsigned char>(c), next.words());
    std::swap(cur, next);
  }
  return cur;
}

bool accepts(const Nfa& nfa, std::string_view u) {
  Simulator sim(nfa);
  return run(nfa, u, sim.initial_closure()).intersects(nfa.accepting());
}

BoolArray prefix_acceptance(const Nfa& nfa, std::string_view w) {
  Simulator sim(nfa);
  BoolArray out(0, w.size());
  StateSet cur = sim.initial_closure();
  StateSet next(nfa.size());
  out.set(0, cur.intersects(nfa.accepting()));
  for (std::size_t i = 1; i <= w.size(); ++i) {
    sim.step(cur.words(), static_cast<unsigned char>(w[i - 1]), next.words());
    std::swap(cur, next);
    out.set(i, cur.intersects(nfa.accepting()));
  }
  return out;
}

SummaryVector summary_init(const Nfa& nfa) { return SummaryVector(nfa.size()); }

SummaryVector summary_step(const Nfa& nfa, const SummaryVector& v, unsigned char a) {
  Simulator sim(nfa);
  SummaryVector out = v;
  sim.step_summary(out, a);
  return out;
}

SummaryVector summary_inject(SummaryVector v) {
  v.inject_diagonal();
  return v;
}

}  // namespace rewb
