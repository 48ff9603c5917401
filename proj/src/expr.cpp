#include "malalgo/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace malalgo {

ExprPtr make_const(Rational value) {
    return std::make_shared<Expr>(Expr{ConstE{std::move(value)}});
}

ExprPtr make_xterm(Rational coeff) {
    return std::make_shared<Expr>(Expr{XTermE{std::move(coeff)}});
}

ExprPtr make_bin(BinKind kind, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(Expr{BinE{kind, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_scaled(Rational factor, ExprPtr inner) {
    return std::make_shared<Expr>(Expr{ScaledE{std::move(factor), std::move(inner)}});
}

bool struct_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* ca = std::get_if<ConstE>(&a->node)) {
        return ca->value == std::get<ConstE>(b->node).value;
    }
    if (const auto* xa = std::get_if<XTermE>(&a->node)) {
        return xa->coeff == std::get<XTermE>(b->node).coeff;
    }
    if (const auto* ba = std::get_if<BinE>(&a->node)) {
        const auto& bb = std::get<BinE>(b->node);
        return ba->kind == bb.kind && struct_equal(ba->lhs, bb.lhs) && struct_equal(ba->rhs, bb.rhs);
    }
    const auto& sa = std::get<ScaledE>(a->node);
    const auto& sb = std::get<ScaledE>(b->node);
    return sa.factor == sb.factor && struct_equal(sa.inner, sb.inner);
}

bool struct_equal(const Equation& a, const Equation& b) {
    return struct_equal(a.lhs, b.lhs) && struct_equal(a.rhs, b.rhs);
}

bool leading_negative(const ExprPtr& e) {
    if (const auto* c = std::get_if<ConstE>(&e->node)) return c->value.is_negative();
    if (const auto* x = std::get_if<XTermE>(&e->node)) return x->coeff.is_negative();
    if (const auto* s = std::get_if<ScaledE>(&e->node)) return s->factor.is_negative();
    const auto& b = std::get<BinE>(e->node);
    return leading_negative(b.lhs);
}

ExprPtr negate_leading(const ExprPtr& e) {
    if (const auto* c = std::get_if<ConstE>(&e->node)) return make_const(-c->value);
    if (const auto* x = std::get_if<XTermE>(&e->node)) return make_xterm(-x->coeff);
    if (const auto* s = std::get_if<ScaledE>(&e->node)) return make_scaled(-s->factor, s->inner);
    const auto& b = std::get<BinE>(e->node);
    return make_bin(b.kind, negate_leading(b.lhs), b.rhs);
}

ExprPtr append_term(ExprPtr acc, ExprPtr term) {
    if (!acc) return term;
    if (leading_negative(term)) {
        return make_bin(BinKind::Sub, std::move(acc), negate_leading(term));
    }
    return make_bin(BinKind::Add, std::move(acc), std::move(term));
}

ExprPtr build_sum(const std::vector<ExprPtr>& terms) {
    ExprPtr acc;
    for (const auto& t : terms) acc = append_term(std::move(acc), t);
    if (!acc) acc = make_const(Rational(0));
    return acc;
}

namespace {

void flatten_into(const ExprPtr& e, std::vector<ExprPtr>& out) {
    if (const auto* b = std::get_if<BinE>(&e->node); b && b->kind != BinKind::Mul) {
        flatten_into(b->lhs, out);
        out.push_back(b->kind == BinKind::Sub ? negate_leading(b->rhs) : b->rhs);
        return;
    }
    out.push_back(e);
}

}  // namespace

std::vector<ExprPtr> flatten_sum(const ExprPtr& side) {
    std::vector<ExprPtr> out;
    flatten_into(side, out);
    return out;
}

namespace {

std::string render_coeff_x(const Rational& coeff) {
    if (coeff.is_one()) return "x";
    if (coeff == Rational(-1)) return "-x";
    return coeff.to_string() + "x";
}

// Renders one term (no surrounding sum context).
std::string render_term(const ExprPtr& e);

std::string render_sum(const ExprPtr& e) {
    if (const auto* b = std::get_if<BinE>(&e->node); b && b->kind != BinKind::Mul) {
        std::string left = render_sum(b->lhs);
        ExprPtr rhs = b->rhs;
        BinKind op = b->kind;
        // Absorb a negative leading sign into the operator.
        if (leading_negative(rhs)) {
            rhs = negate_leading(rhs);
            op = (op == BinKind::Add) ? BinKind::Sub : BinKind::Add;
        }
        return left + (op == BinKind::Add ? " + " : " - ") + render_term(rhs);
    }
    return render_term(e);
}

std::string render_term(const ExprPtr& e) {
    if (const auto* c = std::get_if<ConstE>(&e->node)) return c->value.to_string();
    if (const auto* x = std::get_if<XTermE>(&e->node)) return render_coeff_x(x->coeff);
    if (const auto* s = std::get_if<ScaledE>(&e->node)) {
        std::string prefix;
        if (s->factor == Rational(-1)) {
            prefix = "-";
        } else if (!s->factor.is_one()) {
            prefix = s->factor.to_string();
        }
        return prefix + "(" + render_sum(s->inner) + ")";
    }
    const auto& b = std::get<BinE>(e->node);
    if (b.kind == BinKind::Mul) {
        return render_term(b.lhs) + " * " + render_term(b.rhs);
    }
    // A nested sum in term position only arises from hand-built ASTs;
    // parenthesize so the output stays grammatical.
    return "(" + render_sum(e) + ")";
}

}  // namespace

std::string render(const ExprPtr& e) {
    return render_sum(e);
}

std::string render(const Equation& eq) {
    return render(eq.lhs) + " = " + render(eq.rhs);
}

Rational eval_at(const ExprPtr& e, const Rational& x) {
    if (const auto* c = std::get_if<ConstE>(&e->node)) return c->value;
    if (const auto* xt = std::get_if<XTermE>(&e->node)) return xt->coeff * x;
    if (const auto* s = std::get_if<ScaledE>(&e->node)) return s->factor * eval_at(s->inner, x);
    const auto& b = std::get<BinE>(e->node);
    Rational l = eval_at(b.lhs, x);
    Rational r = eval_at(b.rhs, x);
    switch (b.kind) {
        case BinKind::Add: return l + r;
        case BinKind::Sub: return l - r;
        case BinKind::Mul: return l * r;
    }
    throw std::logic_error("unreachable");
}

bool substitute_check(const Equation& eq, const Rational& value) {
    return eval_at(eq.lhs, value) == eval_at(eq.rhs, value);
}

bool contains_x(const ExprPtr& e) {
    if (std::holds_alternative<XTermE>(e->node)) return true;
    if (const auto* s = std::get_if<ScaledE>(&e->node)) return contains_x(s->inner);
    if (const auto* b = std::get_if<BinE>(&e->node)) {
        return contains_x(b->lhs) || contains_x(b->rhs);
    }
    return false;
}

int degree(const ExprPtr& e) {
    if (std::holds_alternative<ConstE>(e->node)) return 0;
    if (std::holds_alternative<XTermE>(e->node)) return 1;
    if (const auto* s = std::get_if<ScaledE>(&e->node)) return degree(s->inner);
    const auto& b = std::get<BinE>(e->node);
    int l = degree(b.lhs);
    int r = degree(b.rhs);
    if (b.kind == BinKind::Mul) return std::min(l + r, 2);
    return std::max(l, r);
}

namespace {

struct Counts {
    unsigned scaled = 0, mul = 0, addsub = 0, xterm = 0, cnst = 0;
};

void count_nodes(const ExprPtr& e, Counts& c) {
    if (std::holds_alternative<ConstE>(e->node)) {
        ++c.cnst;
    } else if (std::holds_alternative<XTermE>(e->node)) {
        ++c.xterm;
    } else if (const auto* s = std::get_if<ScaledE>(&e->node)) {
        ++c.scaled;
        count_nodes(s->inner, c);
    } else {
        const auto& b = std::get<BinE>(e->node);
        if (b.kind == BinKind::Mul) {
            ++c.mul;
        } else {
            ++c.addsub;
        }
        count_nodes(b.lhs, c);
        count_nodes(b.rhs, c);
    }
}

}  // namespace

bool is_solved_form(const Equation& eq) {
    const auto* x = std::get_if<XTermE>(&eq.lhs->node);
    return x != nullptr && x->coeff.is_one() && std::holds_alternative<ConstE>(eq.rhs->node);
}

unsigned complexity(const Equation& eq) {
    Counts l, r;
    count_nodes(eq.lhs, l);
    count_nodes(eq.rhs, r);
    unsigned mu = 0;
    mu += 6 * (l.scaled + r.scaled);
    mu += 5 * (l.mul + r.mul);
    mu += 2 * (l.addsub + r.addsub);
    mu += l.xterm + r.xterm;
    mu += l.cnst + r.cnst;
    mu += r.xterm;  // x-terms still on the rhs
    mu += l.cnst;   // constants still on the lhs
    mu += is_solved_form(eq) ? 0u : 1u;
    return mu;
}

}  // namespace malalgo
