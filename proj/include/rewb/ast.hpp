#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rewb {

using CharSet = std::bitset<256>;

/// The finite universe that `.` and negated classes are resolved against.
/// Matching is byte-wise; the default universe is printable ASCII.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(const CharSet& chars) : chars_(chars) {}

  static Alphabet printable_ascii();
  static Alphabet all_bytes();

  /// Accepts "printable", "bytes", or a class body such as "a-z0-9_".
  /// Throws PatternError on a malformed body.
  static Alphabet from_spec(std::string_view spec);

  const CharSet& chars() const { return chars_; }
  bool contains(unsigned char c) const { return chars_.test(c); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  CharSet chars_;
};

enum class NodeKind : std::uint8_t {
  Empty,
  Literal,
  AnyChar,
  Class,
  Concat,
  Alternation,
  Star,
  Plus,
  Optional,
};

/// Syntax tree of a pure regular expression.
///
/// Trees built through the factory functions are normalized: Concat and
/// Alternation nodes have at least two children and never directly contain
/// a node of their own kind, and Concat never contains Empty.
struct RegexAst {
  NodeKind kind = NodeKind::Empty;
  unsigned char literal = 0;
  CharSet chars;  // Class members
  bool negated = false;
  std::vector<RegexAst> children;

  static RegexAst empty();
  static RegexAst lit(unsigned char c);
  static RegexAst any();
  static RegexAst char_class(const CharSet& members, bool negated);
  static RegexAst concat(std::vector<RegexAst> parts);
  static RegexAst alternation(std::vector<RegexAst> parts);
  static RegexAst star(RegexAst child);
  static RegexAst plus(RegexAst child);
  static RegexAst optional(RegexAst child);

  /// Literal string helper: concatenation of its bytes.
  static RegexAst text(std::string_view s);

  friend bool operator==(const RegexAst&, const RegexAst&) = default;
};

std::size_t node_count(const RegexAst& ast);

/// Language reversal: every Concat has its children in reverse order.
RegexAst reverse_ast(const RegexAst& ast);

/// Prints the tree in the accepted pattern grammar; parse_regex of the
/// result yields an equal tree.
std::string to_pattern(const RegexAst& ast);

}  // namespace rewb
