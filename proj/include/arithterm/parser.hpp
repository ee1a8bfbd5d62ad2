#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "arithterm/error.hpp"
#include "arithterm/term.hpp"

// Concrete syntax for arithmetic terms:
//
//   expr   := addsub
//   addsub := muldiv (('+' | '-.') muldiv)*
//   muldiv := pow (('*' | '/' | '%') pow)*
//   pow    := atom ('^' pow)?
//   atom   := NAT | IDENT | '(' expr ')'
//
// '-.' is truncated subtraction, '/' floored division; '^' is
// right-associative, all other operators left-associative. Whitespace is
// insignificant. Numerals are decimal.

namespace arithterm {

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view src) : src_(src) {}

  TermPtr parse_all() {
    TermPtr t = parse_addsub();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  TermPtr parse_addsub() {
    TermPtr lhs = parse_muldiv();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        lhs = Term::add(std::move(lhs), parse_muldiv());
      } else if (peek() == '-') {
        if (pos_ + 1 >= src_.size() || src_[pos_ + 1] != '.')
          throw ParseError(
              "expected '.' after '-' (truncated subtraction is '-.')",
              pos_);
        pos_ += 2;
        lhs = Term::trunc_sub(std::move(lhs), parse_muldiv());
      } else {
        return lhs;
      }
    }
  }

  TermPtr parse_muldiv() {
    TermPtr lhs = parse_pow();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        lhs = Term::mul(std::move(lhs), parse_pow());
      } else if (c == '/') {
        ++pos_;
        lhs = Term::floor_div(std::move(lhs), parse_pow());
      } else if (c == '%') {
        ++pos_;
        lhs = Term::mod(std::move(lhs), parse_pow());
      } else {
        return lhs;
      }
    }
  }

  TermPtr parse_pow() {
    TermPtr base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return Term::pow(std::move(base), parse_pow());
    }
    return base;
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos_ == src_.size())
      throw ParseError("expected a number, variable, or '('", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      TermPtr inner = parse_addsub();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return Term::constant(
          Natural::from_decimal(src_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      return Term::var(std::string(src_.substr(start, pos_ - start)));
    }
    throw ParseError("expected a number, variable, or '('", pos_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline int precedence(TermKind k) {
  switch (k) {
    case TermKind::Add:
    case TermKind::TruncSub:
      return 1;
    case TermKind::Mul:
    case TermKind::FloorDiv:
    case TermKind::Mod:
      return 2;
    case TermKind::Pow:
      return 3;
    default:
      return 4;
  }
}

inline const char* op_spelling(TermKind k) {
  switch (k) {
    case TermKind::Add:
      return " + ";
    case TermKind::TruncSub:
      return " -. ";
    case TermKind::Mul:
      return " * ";
    case TermKind::FloorDiv:
      return " / ";
    case TermKind::Mod:
      return " % ";
    default:
      return "^";
  }
}

// min_prec is the lowest precedence printable here without parentheses.
inline void render(const Term& t, int min_prec, std::string& out) {
  int p = precedence(t.kind());
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (t.kind()) {
    case TermKind::Const:
      out += t.value().str();
      break;
    case TermKind::Var:
      out += t.name();
      break;
    default: {
      bool right_assoc = t.kind() == TermKind::Pow;
      render(*t.left(), right_assoc ? p + 1 : p, out);
      out += op_spelling(t.kind());
      render(*t.right(), right_assoc ? p : p + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace detail

/// Parses a term in the grammar above; throws ParseError with the offset of
/// the offending character.
inline TermPtr parse(std::string_view src) {
  return detail::TermParser(src).parse_all();
}

/// Renders with minimal parentheses; parse(to_string(t)) is structurally
/// equal to t.
inline std::string to_string(const Term& t) {
  std::string out;
  detail::render(t, 0, out);
  return out;
}
inline std::string to_string(const TermPtr& t) { return to_string(*t); }

inline std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << to_string(t);
}

}  // namespace arithterm
