#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rewb/ast.hpp"

namespace rewb {

/// Malformed pattern text. `position` is the byte offset of the problem.
class PatternError : public std::runtime_error {
 public:
  PatternError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A syntactically valid pattern outside the `e0 (e) e1 \1 e2` fragment.
class RewbFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A regular expression with one capture and one backreference,
/// `e0 (e) e1 \1 e2`. Absent components are Empty.
struct RewbQuery {
  RegexAst e0;
  RegexAst e;
  RegexAst e1;
  RegexAst e2;

  std::size_t m_e0() const { return node_count(e0); }
  std::size_t m_e() const { return node_count(e); }
  std::size_t m_e1() const { return node_count(e1); }
  std::size_t m_e2() const { return node_count(e2); }

  /// Total pattern length in AST nodes, counting the capture and the
  /// reference as one node each.
  std::size_t m() const { return m_e0() + m_e() + m_e1() + m_e2() + 2; }
};

/// Parses a pure regular expression. Captures and backreferences are
/// rejected with PatternError; use `(?:...)` for grouping.
RegexAst parse_regex(std::string_view text);

/// Parses a pattern of the form `e0 (e) e1 \1 e2`. Throws PatternError on
/// bad syntax and RewbFormError when the pattern leaves the fragment.
RewbQuery parse_rewb(std::string_view text);

/// Prints a query back as pattern text accepted by parse_rewb.
std::string to_pattern(const RewbQuery& query);

}  // namespace rewb
