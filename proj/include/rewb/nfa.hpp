#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rewb/ast.hpp"
#include "rewb/bool_array.hpp"
#include "rewb/state_set.hpp"

namespace rewb {

struct NfaState {
  std::vector<StateId> eps;
  bool has_char = false;
  CharSet on;  // labels of the single character edge
  StateId target = 0;
};

/// Thompson automaton. Immutable once built by compile().
class Nfa {
 public:
  std::size_t size() const { return states_.size(); }
  StateId initial() const { return initial_; }
  StateId accept() const { return accept_; }
  const StateSet& accepting() const { return accepting_; }
  const NfaState& state(StateId q) const { return states_[q]; }
  std::size_t transition_count() const;

 private:
  friend class NfaBuilder;

  std::vector<NfaState> states_;
  StateId initial_ = 0;
  StateId accept_ = 0;
  StateSet accepting_;
};

/// Thompson construction: one fresh initial/accept pair per AST node, so
/// size() <= 2 * node_count(ast). `.` and negated classes are resolved
/// against `alphabet`.
Nfa compile(const RegexAst& ast, const Alphabet& alphabet = Alphabet());

/// Scratch buffers for Δ and ε-closure on one automaton. Not thread-safe;
/// use one per concurrent simulation.
class Simulator {
 public:
  explicit Simulator(const Nfa& nfa);

  const Nfa& nfa() const { return *nfa_; }

  /// ε-closure of the initial state.
  const StateSet& initial_closure() const { return initial_closure_; }

  /// In-place ε-closure by depth-first search from every member.
  void close(std::span<Word> set);

  /// to = Δ(from, a) = ecl(δ(from, a)). `from` and `to` must not alias.
  void step(std::span<const Word> from, unsigned char a, std::span<Word> to);

  /// Applies Δ(·, a) to every nonempty row. Returns the rows stepped.
  std::size_t step_summary(SummaryVector& v, unsigned char a);

  /// Number of Δ applications performed so far (one per set, per row).
  std::uint64_t delta_count() const { return delta_count_; }

 private:
  const Nfa* nfa_;
  std::vector<StateId> stack_;
  StateSet initial_closure_;
  std::vector<Word> row_scratch_;
  std::uint64_t delta_count_ = 0;
};

StateSet eps_closure(const Nfa& nfa, const StateSet& s);

/// Δ(s, a).
StateSet step(const Nfa& nfa, const StateSet& s, unsigned char a);

/// Δ(start, u), folding step over u.
StateSet run(const Nfa& nfa, std::string_view u, const StateSet& start);

bool accepts(const Nfa& nfa, std::string_view u);

/// result[i] == accepts(nfa, w[..i]) for i in [0, |w|], in one sweep.
BoolArray prefix_acceptance(const Nfa& nfa, std::string_view w);

SummaryVector summary_init(const Nfa& nfa);

/// Rowwise Δ(·, a).
SummaryVector summary_step(const Nfa& nfa, const SummaryVector& v, unsigned char a);

/// Row l gains state l.
SummaryVector summary_inject(SummaryVector v);

}  // namespace rewb
