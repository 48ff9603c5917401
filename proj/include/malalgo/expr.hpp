#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "malalgo/rational.hpp"

namespace malalgo {

// Surface-structure AST for one side of a linear equation. Parentheses and
// unevaluated products are preserved: misconception rewrites operate on the
// written form, so nothing is simplified at construction time.
//
//   ConstE   literal rational
//   XTermE   coeff * x  (coeff 1 renders "x", -1 renders "-x")
//   BinE     lhs op rhs with op in {+, -, *}
//   ScaledE  factor * (inner), a parenthesized group; factor 1 renders "( )"

enum class BinKind { Add, Sub, Mul };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstE {
    Rational value;
};

struct XTermE {
    Rational coeff;
};

struct BinE {
    BinKind kind;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct ScaledE {
    Rational factor;
    ExprPtr inner;
};

struct Expr {
    std::variant<ConstE, XTermE, BinE, ScaledE> node;
};

ExprPtr make_const(Rational value);
ExprPtr make_xterm(Rational coeff);
ExprPtr make_bin(BinKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_scaled(Rational factor, ExprPtr inner);

struct Equation {
    ExprPtr lhs;
    ExprPtr rhs;
};

bool struct_equal(const ExprPtr& a, const ExprPtr& b);
bool struct_equal(const Equation& a, const Equation& b);

// Sign of the leftmost scalar of a term (used by the renderer and the
// sign-absorbing sum builder).
bool leading_negative(const ExprPtr& e);
ExprPtr negate_leading(const ExprPtr& e);

// Appends `term` to a left-nested sum, absorbing a negative leading sign
// into the operator so rendering never produces "+ -". acc may be null.
ExprPtr append_term(ExprPtr acc, ExprPtr term);
ExprPtr build_sum(const std::vector<ExprPtr>& terms);

// Splits a left-nested sum into self-signed terms; build_sum(flatten_sum(s))
// reproduces s for sign-normalized sides.
std::vector<ExprPtr> flatten_sum(const ExprPtr& side);

// Canonical rendering: single spaces around top-level + - * =, tight "4x",
// tight scalar-group "3(", leading negatives absorbed into the term.
std::string render(const ExprPtr& e);
std::string render(const Equation& eq);

// Exact evaluation with x := value.
Rational eval_at(const ExprPtr& e, const Rational& x);
bool substitute_check(const Equation& eq, const Rational& value);

bool contains_x(const ExprPtr& e);

// Degree in x after full expansion, capped at 2 (the linear-only domain
// rejects anything >= 2).
int degree(const ExprPtr& e);

// Strictly decreasing along every canonical correct reduction step:
//   6*#Scaled + 5*#Mul + 2*#(Add|Sub) + #XTerm + #Const
//   + #(x-terms on rhs) + #(consts on lhs) + (solved form ? 0 : 1)
unsigned complexity(const Equation& eq);

// True iff eq is exactly `x = <rational>`.
bool is_solved_form(const Equation& eq);

}  // namespace malalgo
