#include "rewb/ast.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <utility>

namespace rewb {

Alphabet::Alphabet() : Alphabet(printable_ascii()) {}

Alphabet Alphabet::printable_ascii() {
  CharSet cs;
  for (int c = 0x20; c <= 0x7e; ++c) cs.set(static_cast<std::size_t>(c));
  return Alphabet(cs);
}

Alphabet Alphabet::all_bytes() {
  CharSet cs;
  cs.set();
  return Alphabet(cs);
}

RegexAst RegexAst::empty() { return RegexAst{}; }

RegexAst RegexAst::lit(unsigned char c) {
  RegexAst n;
  n.kind = NodeKind::Literal;
  n.literal = c;
  return n;
}

RegexAst RegexAst::any() {
  RegexAst n;
  n.kind = NodeKind::AnyChar;
  return n;
}

RegexAst RegexAst::char_class(const CharSet& members, bool negated) {
  assert(negated || members.any());
  RegexAst n;
  n.kind = NodeKind::Class;
  n.chars = members;
  n.negated = negated;
  return n;
}

namespace {

RegexAst make_nary(NodeKind kind, std::vector<RegexAst> parts) {
  std::vector<RegexAst> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.kind == kind) {
      for (auto& c : p.children) flat.push_back(std::move(c));
    } else if (kind == NodeKind::Concat && p.kind == NodeKind::Empty) {
      continue;
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return RegexAst::empty();
  if (flat.size() == 1) return std::move(flat.front());
  RegexAst n;
  n.kind = kind;
  n.children = std::move(flat);
  return n;
}

RegexAst make_unary(NodeKind kind, RegexAst child) {
  RegexAst n;
  n.kind = kind;
  n.children.push_back(std::move(child));
  return n;
}

}  // namespace

RegexAst RegexAst::concat(std::vector<RegexAst> parts) {
  return make_nary(NodeKind::Concat, std::move(parts));
}

RegexAst RegexAst::alternation(std::vector<RegexAst> parts) {
  assert(!parts.empty());
  return make_nary(NodeKind::Alternation, std::move(parts));
}

RegexAst RegexAst::star(RegexAst child) { return make_unary(NodeKind::Star, std::move(child)); }
RegexAst RegexAst::plus(RegexAst child) { return make_unary(NodeKind::Plus, std::move(child)); }
RegexAst RegexAst::optional(RegexAst child) {
  return make_unary(NodeKind::Optional, std::move(child));
}

RegexAst RegexAst::text(std::string_view s) {
  std::vector<RegexAst> parts;
  for (char c : s) parts.push_back(lit(static_cast<unsigned char>(c)));
  return concat(std::move(parts));
}

std::size_t node_count(const RegexAst& ast) {
  std::size_t n = 1;
  for (const auto& c : ast.children) n += node_count(c);
  return n;
}

RegexAst reverse_ast(const RegexAst& ast) {
  RegexAst out = ast;
  out.children.clear();
  for (const auto& c : ast.children) out.children.push_back(reverse_ast(c));
  if (out.kind == NodeKind::Concat) std::reverse(out.children.begin(), out.children.end());
  return out;
}

namespace {

constexpr std::string_view kMeta = "\\.|*+?()[]{}^$";

void append_escaped(std::string& out, unsigned char c, bool in_class) {
  bool special = in_class ? (c == ']' || c == '\\' || c == '^' || c == '-' || c == '[')
                          : kMeta.find(static_cast<char>(c)) != std::string_view::npos;
  if (c < 0x20 || c >= 0x7f) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", c);
    out += buf;
  } else if (special) {
    out += '\\';
    out += static_cast<char>(c);
  } else {
    out += static_cast<char>(c);
  }
}

void append_class(std::string& out, const RegexAst& ast) {
  out += ast.negated ? "[^" : "[";
  int c = 0;
  while (c < 256) {
    if (!ast.chars.test(static_cast<std::size_t>(c))) {
      ++c;
      continue;
    }
    int end = c;
    while (end + 1 < 256 && ast.chars.test(static_cast<std::size_t>(end + 1))) ++end;
    append_escaped(out, static_cast<unsigned char>(c), true);
    if (end > c + 1) out += '-';
    if (end > c) append_escaped(out, static_cast<unsigned char>(end), true);
    c = end + 1;
  }
  out += ']';
}

void print(std::string& out, const RegexAst& ast);

void print_grouped(std::string& out, const RegexAst& ast) {
  out += "(?:";
  print(out, ast);
  out += ')';
}

void print(std::string& out, const RegexAst& ast) {
  switch (ast.kind) {
    case NodeKind::Empty:
      break;
    case NodeKind::Literal:
      append_escaped(out, ast.literal, false);
      break;
    case NodeKind::AnyChar:
      out += '.';
      break;
    case NodeKind::Class:
      append_class(out, ast);
      break;
    case NodeKind::Concat:
      for (const auto& c : ast.children) {
        if (c.kind == NodeKind::Alternation) {
          print_grouped(out, c);
        } else {
          print(out, c);
        }
      }
      break;
    case NodeKind::Alternation:
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += '|';
        print(out, ast.children[i]);
      }
      break;
    case NodeKind::Star:
    case NodeKind::Plus:
    case NodeKind::Optional: {
      const auto& c = ast.children.front();
      bool atomic = c.kind == NodeKind::Literal || c.kind == NodeKind::AnyChar ||
                    c.kind == NodeKind::Class;
      if (atomic) {
        print(out, c);
      } else {
        print_grouped(out, c);
      }
      out += ast.kind == NodeKind::Star ? '*' : ast.kind == NodeKind::Plus ? '+' : '?';
      break;
    }
  }
}

}  // namespace

std::string to_pattern(const RegexAst& ast) {
  std::string out;
  print(out, ast);
  return out;
}

}  // namespace rewb
