#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "arithterm/error.hpp"
#include "arithterm/natural.hpp"

namespace arithterm {

enum class TermKind : std::uint8_t {
  Const,
  Var,
  Add,
  TruncSub,
  Mul,
  FloorDiv,
  Mod,
  Pow,
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Variable bindings for evaluation.
using Env = std::map<std::string, Natural, std::less<>>;

/// Immutable node of an arithmetic term: constants and variables combined
/// with +, ∸, ·, ⌊/⌋, mod and exponentiation. Nodes are shared freely;
/// equality and size are those of the unfolded tree.
class Term {
 public:
  static TermPtr constant(Natural value) {
    return TermPtr(new Term(TermKind::Const, std::move(value), {}, {}, {}));
  }
  static TermPtr var(std::string name) {
    return TermPtr(new Term(TermKind::Var, {}, std::move(name), {}, {}));
  }
  static TermPtr add(TermPtr l, TermPtr r) {
    return binary(TermKind::Add, std::move(l), std::move(r));
  }
  static TermPtr trunc_sub(TermPtr l, TermPtr r) {
    return binary(TermKind::TruncSub, std::move(l), std::move(r));
  }
  static TermPtr mul(TermPtr l, TermPtr r) {
    return binary(TermKind::Mul, std::move(l), std::move(r));
  }
  static TermPtr floor_div(TermPtr l, TermPtr r) {
    return binary(TermKind::FloorDiv, std::move(l), std::move(r));
  }
  static TermPtr mod(TermPtr l, TermPtr r) {
    return binary(TermKind::Mod, std::move(l), std::move(r));
  }
  static TermPtr pow(TermPtr base, TermPtr exp) {
    return binary(TermKind::Pow, std::move(base), std::move(exp));
  }

  TermKind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept {
    return kind_ == TermKind::Const || kind_ == TermKind::Var;
  }

  const Natural& value() const noexcept { return value_; }  // Const only
  const std::string& name() const noexcept { return name_; }  // Var only
  const TermPtr& left() const noexcept { return left_; }
  const TermPtr& right() const noexcept { return right_; }

 private:
  static TermPtr binary(TermKind k, TermPtr l, TermPtr r) {
    if (!l || !r) throw Error("null subterm");
    return TermPtr(new Term(k, {}, {}, std::move(l), std::move(r)));
  }

  Term(TermKind kind, Natural value, std::string name, TermPtr l, TermPtr r)
      : kind_(kind),
        value_(std::move(value)),
        name_(std::move(name)),
        left_(std::move(l)),
        right_(std::move(r)) {}

  TermKind kind_;
  Natural value_;
  std::string name_;
  TermPtr left_, right_;
};

/// Structural equality of the unfolded trees.
inline bool operator==(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Const:
      return a.value() == b.value();
    case TermKind::Var:
      return a.name() == b.name();
    default:
      return *a.left() == *b.left() && *a.right() == *b.right();
  }
}

/// Node count of the unfolded tree.
inline std::size_t term_size(const Term& t) {
  return t.is_leaf() ? 1 : 1 + term_size(*t.left()) + term_size(*t.right());
}
inline std::size_t term_size(const TermPtr& t) { return term_size(*t); }

/// Tree height; a single leaf has depth 1.
inline std::size_t term_depth(const Term& t) {
  return t.is_leaf()
             ? 1
             : 1 + std::max(term_depth(*t.left()), term_depth(*t.right()));
}
inline std::size_t term_depth(const TermPtr& t) { return term_depth(*t); }

/// Replaces every variable bound in env by the corresponding constant.
/// Unbound variables stay; untouched subtrees are shared, not copied.
inline TermPtr substitute(const TermPtr& t, const Env& env) {
  switch (t->kind()) {
    case TermKind::Const:
      return t;
    case TermKind::Var: {
      auto it = env.find(t->name());
      return it == env.end() ? t : Term::constant(it->second);
    }
    default: {
      TermPtr l = substitute(t->left(), env);
      TermPtr r = substitute(t->right(), env);
      if (l == t->left() && r == t->right()) return t;
      switch (t->kind()) {
        case TermKind::Add:
          return Term::add(std::move(l), std::move(r));
        case TermKind::TruncSub:
          return Term::trunc_sub(std::move(l), std::move(r));
        case TermKind::Mul:
          return Term::mul(std::move(l), std::move(r));
        case TermKind::FloorDiv:
          return Term::floor_div(std::move(l), std::move(r));
        case TermKind::Mod:
          return Term::mod(std::move(l), std::move(r));
        default:
          return Term::pow(std::move(l), std::move(r));
      }
    }
  }
}

/// Exact bottom-up evaluation under the term-language conventions:
/// 0^0 = 1, ⌊a/0⌋ = 0, a mod b = a ∸ b·⌊a/b⌋. Every free variable of t
/// must be bound in env; there are no arithmetic failures apart from the
/// machine-word cap on exponents.
inline Natural eval(const Term& t, const Env& env = {}) {
  switch (t.kind()) {
    case TermKind::Const:
      return t.value();
    case TermKind::Var: {
      auto it = env.find(t.name());
      if (it == env.end())
        throw EvalError("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case TermKind::Add:
      return eval(*t.left(), env) + eval(*t.right(), env);
    case TermKind::TruncSub:
      return trunc_sub(eval(*t.left(), env), eval(*t.right(), env));
    case TermKind::Mul:
      return eval(*t.left(), env) * eval(*t.right(), env);
    case TermKind::FloorDiv:
      return floor_div(eval(*t.left(), env), eval(*t.right(), env));
    case TermKind::Mod:
      return mod(eval(*t.left(), env), eval(*t.right(), env));
    default:
      return pow(eval(*t.left(), env), eval(*t.right(), env));
  }
}
inline Natural eval(const TermPtr& t, const Env& env = {}) {
  return eval(*t, env);
}

// Expression-building sugar; trunc_sub and pow stay named functions.
inline TermPtr operator+(TermPtr a, TermPtr b) {
  return Term::add(std::move(a), std::move(b));
}
inline TermPtr operator*(TermPtr a, TermPtr b) {
  return Term::mul(std::move(a), std::move(b));
}
inline TermPtr operator/(TermPtr a, TermPtr b) {
  return Term::floor_div(std::move(a), std::move(b));
}
inline TermPtr operator%(TermPtr a, TermPtr b) {
  return Term::mod(std::move(a), std::move(b));
}
inline TermPtr pow(TermPtr a, TermPtr b) {
  return Term::pow(std::move(a), std::move(b));
}
inline TermPtr trunc_sub(TermPtr a, TermPtr b) {
  return Term::trunc_sub(std::move(a), std::move(b));
}

enum class SignedKind : std::uint8_t {
  Const,
  Var,
  Add,
  Sub,
  TruncSub,
  Mul,
  FloorDiv,
  Mod,
  Pow,
};

class SignedExpr;
using SignedExprPtr = std::shared_ptr<const SignedExpr>;

/// The term grammar extended with true subtraction, evaluated over the
/// integers: floored division rounds toward negative infinity and mod is
/// the Euclidean remainder. Restricted to the subtraction-free fragment it
/// agrees with eval.
class SignedExpr {
 public:
  static SignedExprPtr constant(Natural value) {
    return SignedExprPtr(
        new SignedExpr(SignedKind::Const, std::move(value), {}, {}, {}));
  }
  static SignedExprPtr var(std::string name) {
    return SignedExprPtr(
        new SignedExpr(SignedKind::Var, {}, std::move(name), {}, {}));
  }
  static SignedExprPtr add(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::Add, std::move(l), std::move(r));
  }
  static SignedExprPtr sub(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::Sub, std::move(l), std::move(r));
  }
  static SignedExprPtr trunc_sub(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::TruncSub, std::move(l), std::move(r));
  }
  static SignedExprPtr mul(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::Mul, std::move(l), std::move(r));
  }
  static SignedExprPtr floor_div(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::FloorDiv, std::move(l), std::move(r));
  }
  static SignedExprPtr mod(SignedExprPtr l, SignedExprPtr r) {
    return binary(SignedKind::Mod, std::move(l), std::move(r));
  }
  static SignedExprPtr pow(SignedExprPtr base, SignedExprPtr exp) {
    return binary(SignedKind::Pow, std::move(base), std::move(exp));
  }

  /// Embeds an arithmetic term into the signed grammar.
  static SignedExprPtr lift(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Const:
        return constant(t->value());
      case TermKind::Var:
        return var(t->name());
      case TermKind::Add:
        return add(lift(t->left()), lift(t->right()));
      case TermKind::TruncSub:
        return trunc_sub(lift(t->left()), lift(t->right()));
      case TermKind::Mul:
        return mul(lift(t->left()), lift(t->right()));
      case TermKind::FloorDiv:
        return floor_div(lift(t->left()), lift(t->right()));
      case TermKind::Mod:
        return mod(lift(t->left()), lift(t->right()));
      default:
        return pow(lift(t->left()), lift(t->right()));
    }
  }

  SignedKind kind() const noexcept { return kind_; }
  const Natural& value() const noexcept { return value_; }
  const std::string& name() const noexcept { return name_; }
  const SignedExprPtr& left() const noexcept { return left_; }
  const SignedExprPtr& right() const noexcept { return right_; }

 private:
  static SignedExprPtr binary(SignedKind k, SignedExprPtr l, SignedExprPtr r) {
    if (!l || !r) throw Error("null subexpression");
    return SignedExprPtr(new SignedExpr(k, {}, {}, std::move(l), std::move(r)));
  }

  SignedExpr(SignedKind kind, Natural value, std::string name, SignedExprPtr l,
             SignedExprPtr r)
      : kind_(kind),
        value_(std::move(value)),
        name_(std::move(name)),
        left_(std::move(l)),
        right_(std::move(r)) {}

  SignedKind kind_;
  Natural value_;
  std::string name_;
  SignedExprPtr left_, right_;
};

inline SignedValue eval_signed(const SignedExpr& e, const Env& env = {}) {
  switch (e.kind()) {
    case SignedKind::Const:
      return SignedValue(e.value());
    case SignedKind::Var: {
      auto it = env.find(e.name());
      if (it == env.end())
        throw EvalError("unbound variable '" + e.name() + "'");
      return SignedValue(it->second);
    }
    case SignedKind::Add:
      return eval_signed(*e.left(), env) + eval_signed(*e.right(), env);
    case SignedKind::Sub:
      return eval_signed(*e.left(), env) - eval_signed(*e.right(), env);
    case SignedKind::TruncSub:
      return trunc_sub(eval_signed(*e.left(), env),
                       eval_signed(*e.right(), env));
    case SignedKind::Mul:
      return eval_signed(*e.left(), env) * eval_signed(*e.right(), env);
    case SignedKind::FloorDiv:
      return floor_div(eval_signed(*e.left(), env),
                       eval_signed(*e.right(), env));
    case SignedKind::Mod:
      return euclid_mod(eval_signed(*e.left(), env),
                        eval_signed(*e.right(), env));
    default:
      return pow(eval_signed(*e.left(), env), eval_signed(*e.right(), env));
  }
}
inline SignedValue eval_signed(const SignedExprPtr& e, const Env& env = {}) {
  return eval_signed(*e, env);
}

}  // namespace arithterm
