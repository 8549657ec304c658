#include "rewb/parser.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rewb {
namespace {

// Parse tree before the capture/backreference split. Only this layer knows
// about `( )` captures and `\1`; RegexAst stays a pure regular expression.
struct Raw {
  enum class Kind { Ast, Concat, Alt, Quant, Capture, Backref };

  Kind kind = Kind::Ast;
  RegexAst ast;                          // Kind::Ast
  NodeKind quant = NodeKind::Star;       // Kind::Quant
  std::vector<Raw> kids;
  std::size_t pos = 0;

  static Raw leaf(RegexAst a, std::size_t pos) {
    Raw r;
    r.ast = std::move(a);
    r.pos = pos;
    return r;
  }
};

Raw make_list(Raw::Kind kind, std::vector<Raw> parts, std::size_t pos) {
  std::vector<Raw> flat;
  for (auto& p : parts) {
    if (p.kind == kind) {
      for (auto& k : p.kids) flat.push_back(std::move(k));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  Raw r;
  r.kind = kind;
  r.kids = std::move(flat);
  r.pos = pos;
  if (r.kids.empty()) r = Raw::leaf(RegexAst::empty(), pos);
  return r;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Raw parse_all() {
    Raw r = parse_alt();
    if (!at_end()) {
      // Only an unmatched ')' stops parse_alt early.
      throw PatternError("unbalanced ')'", pos_);
    }
    return r;
  }

  // Class body without the surrounding brackets, e.g. "a-z_".
  CharSet parse_class_body_only() {
    CharSet cs;
    while (!at_end()) add_class_item(cs);
    return cs;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  Raw parse_alt() {
    std::size_t start = pos_;
    std::vector<Raw> branches;
    branches.push_back(parse_seq());
    while (!at_end() && peek() == '|') {
      ++pos_;
      branches.push_back(parse_seq());
    }
    return make_list(Raw::Kind::Alt, std::move(branches), start);
  }

  Raw parse_seq() {
    std::size_t start = pos_;
    std::vector<Raw> items;
    while (!at_end() && peek() != '|' && peek() != ')') items.push_back(parse_piece());
    if (items.empty()) return Raw::leaf(RegexAst::empty(), start);
    return make_list(Raw::Kind::Concat, std::move(items), start);
  }

  static bool is_quant(char c) { return c == '*' || c == '+' || c == '?'; }

  Raw parse_piece() {
    std::size_t start = pos_;
    if (is_quant(peek())) throw PatternError("dangling quantifier", pos_);
    Raw atom = parse_atom();
    if (at_end() || !is_quant(peek())) return atom;
    char q = peek();
    ++pos_;
    if (!at_end() && is_quant(peek())) throw PatternError("stacked quantifier", pos_);
    Raw r;
    r.kind = Raw::Kind::Quant;
    r.quant = q == '*' ? NodeKind::Star : q == '+' ? NodeKind::Plus : NodeKind::Optional;
    r.kids.push_back(std::move(atom));
    r.pos = start;
    return r;
  }

  Raw parse_atom() {
    std::size_t start = pos_;
    char c = peek();
    switch (c) {
      case '(': {
        ++pos_;
        bool capture = true;
        if (text_.substr(pos_, 2) == "?:") {
          pos_ += 2;
          capture = false;
        } else if (!at_end() && peek() == '?') {
          throw PatternError("unsupported group syntax", pos_);
        }
        Raw inner = parse_alt();
        if (at_end() || peek() != ')') throw PatternError("unbalanced '('", start);
        ++pos_;
        if (!capture) return inner;
        Raw r;
        r.kind = Raw::Kind::Capture;
        r.kids.push_back(std::move(inner));
        r.pos = start;
        return r;
      }
      case '[':
        return Raw::leaf(parse_class(), start);
      case '.':
        ++pos_;
        return Raw::leaf(RegexAst::any(), start);
      case '\\': {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] >= '1' && text_[pos_ + 1] <= '9') {
          if (text_[pos_ + 1] != '1') {
            throw RewbFormError("only the single backreference \\1 is supported");
          }
          pos_ += 2;
          Raw r;
          r.kind = Raw::Kind::Backref;
          r.pos = start;
          return r;
        }
        return Raw::leaf(RegexAst::lit(parse_escape()), start);
      }
      case '{':
        throw PatternError("counted repetition is not supported", pos_);
      case '^':
      case '$':
        throw PatternError("anchors are not supported", pos_);
      default:
        ++pos_;
        return Raw::leaf(RegexAst::lit(static_cast<unsigned char>(c)), start);
    }
  }

  // Positioned on the backslash.
  unsigned char parse_escape() {
    std::size_t start = pos_;
    ++pos_;
    if (at_end()) throw PatternError("trailing backslash", start);
    char c = text_[pos_++];
    switch (c) {
      case 'n': return '\n';
      case 't': return '\t';
      case 'r': return '\r';
      case 'f': return '\f';
      case 'v': return '\v';
      case '0': return '\0';
      case 'x': {
        if (pos_ + 2 > text_.size()) throw PatternError("truncated \\x escape", start);
        int hi = hex_value(text_[pos_]);
        int lo = hex_value(text_[pos_ + 1]);
        if (hi < 0 || lo < 0) throw PatternError("bad \\x escape", start);
        pos_ += 2;
        return static_cast<unsigned char>(hi * 16 + lo);
      }
      default:
        if (is_word_char(c)) throw PatternError("unsupported escape", start);
        return static_cast<unsigned char>(c);
    }
  }

  unsigned char class_char() {
    if (peek() == '\\') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] >= '1' && text_[pos_ + 1] <= '9') {
        throw PatternError("backreference inside a class", pos_);
      }
      return parse_escape();
    }
    return static_cast<unsigned char>(text_[pos_++]);
  }

  void add_class_item(CharSet& cs) {
    std::size_t start = pos_;
    unsigned char lo = class_char();
    if (pos_ + 1 < text_.size() && peek() == '-' && text_[pos_ + 1] != ']') {
      ++pos_;
      unsigned char hi = class_char();
      if (hi < lo) throw PatternError("bad class range", start);
      for (int c = lo; c <= hi; ++c) cs.set(static_cast<std::size_t>(c));
    } else {
      cs.set(lo);
    }
  }

  RegexAst parse_class() {
    std::size_t start = pos_;
    ++pos_;
    bool negated = false;
    if (!at_end() && peek() == '^') {
      negated = true;
      ++pos_;
    }
    CharSet cs;
    // A ']' right after the opening bracket is a member.
    if (!at_end() && peek() == ']') {
      cs.set(']');
      ++pos_;
    }
    while (!at_end() && peek() != ']') add_class_item(cs);
    if (at_end()) throw PatternError("unterminated character class", start);
    ++pos_;
    return RegexAst::char_class(cs, negated);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Converts a capture/backreference-free subtree.
RegexAst lower(const Raw& r) {
  switch (r.kind) {
    case Raw::Kind::Ast:
      return r.ast;
    case Raw::Kind::Concat:
    case Raw::Kind::Alt: {
      std::vector<RegexAst> parts;
      for (const auto& k : r.kids) parts.push_back(lower(k));
      return r.kind == Raw::Kind::Concat ? RegexAst::concat(std::move(parts))
                                         : RegexAst::alternation(std::move(parts));
    }
    case Raw::Kind::Quant: {
      RegexAst child = lower(r.kids.front());
      if (r.quant == NodeKind::Star) return RegexAst::star(std::move(child));
      if (r.quant == NodeKind::Plus) return RegexAst::plus(std::move(child));
      return RegexAst::optional(std::move(child));
    }
    case Raw::Kind::Capture:
      throw PatternError("capture group in a pure regular expression", r.pos);
    case Raw::Kind::Backref:
      throw PatternError("backreference in a pure regular expression", r.pos);
  }
  return RegexAst::empty();
}

std::size_t count_kind(const Raw& r, Raw::Kind kind) {
  std::size_t n = r.kind == kind ? 1 : 0;
  for (const auto& k : r.kids) n += count_kind(k, kind);
  return n;
}

// Kind of the nearest enclosing node that keeps `kind` off the top level.
std::optional<Raw::Kind> blocking_ancestor(const Raw& r, Raw::Kind kind,
                                           std::optional<Raw::Kind> enclosing) {
  if (r.kind == kind) return enclosing;
  for (const auto& k : r.kids) {
    auto next = r.kind == Raw::Kind::Concat ? enclosing : std::optional<Raw::Kind>(r.kind);
    if (count_kind(k, kind) > 0) return blocking_ancestor(k, kind, next);
  }
  return std::nullopt;
}

const char* describe(Raw::Kind k) {
  switch (k) {
    case Raw::Kind::Quant: return "a quantifier";
    case Raw::Kind::Alt: return "an alternation";
    case Raw::Kind::Capture: return "the capture group";
    default: return "a subexpression";
  }
}

RegexAst lower_range(const std::vector<Raw>& items, std::size_t begin, std::size_t end) {
  std::vector<RegexAst> parts;
  for (std::size_t i = begin; i < end; ++i) parts.push_back(lower(items[i]));
  return RegexAst::concat(std::move(parts));
}

}  // namespace

RegexAst parse_regex(std::string_view text) {
  Parser p(text);
  Raw raw = p.parse_all();
  if (count_kind(raw, Raw::Kind::Backref) > 0) {
    throw PatternError("backreference in a pure regular expression", 0);
  }
  return lower(raw);
}

RewbQuery parse_rewb(std::string_view text) {
  Parser p(text);
  Raw raw = p.parse_all();

  std::size_t captures = count_kind(raw, Raw::Kind::Capture);
  std::size_t refs = count_kind(raw, Raw::Kind::Backref);
  if (captures == 0) throw RewbFormError("pattern has no capture group");
  if (captures > 1) throw RewbFormError("pattern has more than one capture group");
  if (refs == 0) throw RewbFormError("pattern has no backreference \\1");
  if (refs > 1) throw RewbFormError("pattern has more than one backreference");

  for (auto kind : {Raw::Kind::Capture, Raw::Kind::Backref}) {
    if (auto anc = blocking_ancestor(raw, kind, std::nullopt)) {
      throw RewbFormError(std::string(kind == Raw::Kind::Capture ? "capture group" : "backreference") +
                          " is nested under " + describe(*anc));
    }
  }

  std::vector<Raw> items;
  if (raw.kind == Raw::Kind::Concat) {
    items = std::move(raw.kids);
  } else {
    items.push_back(std::move(raw));
  }
  std::size_t cap = items.size();
  std::size_t ref = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].kind == Raw::Kind::Capture) cap = i;
    if (items[i].kind == Raw::Kind::Backref) ref = i;
  }
  if (ref < cap) throw RewbFormError("backreference precedes the capture group");

  RewbQuery q;
  q.e0 = lower_range(items, 0, cap);
  q.e = lower(items[cap].kids.front());
  q.e1 = lower_range(items, cap + 1, ref);
  q.e2 = lower_range(items, ref + 1, items.size());
  return q;
}

std::string to_pattern(const RewbQuery& q) {
  auto group = [](const RegexAst& a) {
    return a.kind == NodeKind::Empty ? std::string() : "(?:" + to_pattern(a) + ")";
  };
  return group(q.e0) + "(" + to_pattern(q.e) + ")" + group(q.e1) + "\\1" + group(q.e2);
}

Alphabet Alphabet::from_spec(std::string_view spec) {
  if (spec == "printable") return printable_ascii();
  if (spec == "bytes") return all_bytes();
  Parser p(spec);
  CharSet cs = p.parse_class_body_only();
  if (cs.none()) throw PatternError("empty alphabet", 0);
  return Alphabet(cs);
}

}  // namespace rewb
