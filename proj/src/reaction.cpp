#include "vadm/reaction.hpp"

#include <cmath>

namespace vadm {
namespace detail {

struct ReactionExpr {
    enum class Op { Const, Var, Add, Sub, Mul, Pow, Exp, Sin, Cos, Atan };

    Op op = Op::Const;
    double value = 0.0;  // Const
    int exponent = 0;    // Pow
    std::shared_ptr<const ReactionExpr> lhs, rhs;

    template <typename T>
    T eval(const T& u) const;
};

namespace {

// Overload set shared by the double and jet evaluation paths.
double make_constant(const double&, double v) { return v; }
Jet make_constant(const Jet& like, double v) { return Jet::constant(v, like.order()); }
double pow_impl(double b, int n) { return ipow(b, n); }
Jet pow_impl(const Jet& b, int n) { return pow(b, n); }
double exp_impl(double v) { return std::exp(v); }
double sin_impl(double v) { return std::sin(v); }
double cos_impl(double v) { return std::cos(v); }
double atan_impl(double v) { return std::atan(v); }
Jet exp_impl(const Jet& v) { return exp(v); }
Jet sin_impl(const Jet& v) { return sin(v); }
Jet cos_impl(const Jet& v) { return cos(v); }
Jet atan_impl(const Jet& v) { return atan(v); }

}  // namespace

template <typename T>
T ReactionExpr::eval(const T& u) const {
    switch (op) {
        case Op::Const: return make_constant(u, value);
        case Op::Var: return u;
        case Op::Add: return lhs->eval(u) + rhs->eval(u);
        case Op::Sub: return lhs->eval(u) - rhs->eval(u);
        case Op::Mul: return lhs->eval(u) * rhs->eval(u);
        case Op::Pow: return pow_impl(lhs->eval(u), exponent);
        case Op::Exp: return exp_impl(lhs->eval(u));
        case Op::Sin: return sin_impl(lhs->eval(u));
        case Op::Cos: return cos_impl(lhs->eval(u));
        case Op::Atan: return atan_impl(lhs->eval(u));
    }
    return u;  // unreachable
}

}  // namespace detail

using detail::ReactionExpr;
using Op = ReactionExpr::Op;

Reaction::Reaction(std::shared_ptr<const detail::ReactionExpr> node) : node_(std::move(node)) {}

Reaction::Reaction() : Reaction(constant(0.0)) {}

Reaction Reaction::variable() {
    auto e = std::make_shared<ReactionExpr>();
    e->op = Op::Var;
    return Reaction(std::move(e));
}

Reaction Reaction::constant(double value) {
    auto e = std::make_shared<ReactionExpr>();
    e->op = Op::Const;
    e->value = value;
    return Reaction(std::move(e));
}

double Reaction::operator()(double u) const { return node_->eval(u); }

Jet Reaction::operator()(const Jet& u) const { return node_->eval(u); }

static std::shared_ptr<ReactionExpr> make_node(Op op) {
    auto e = std::make_shared<ReactionExpr>();
    e->op = op;
    return e;
}

Reaction operator+(const Reaction& a, const Reaction& b) {
    auto e = make_node(Op::Add);
    e->lhs = a.node_;
    e->rhs = b.node_;
    return Reaction(std::move(e));
}

Reaction operator-(const Reaction& a, const Reaction& b) {
    auto e = make_node(Op::Sub);
    e->lhs = a.node_;
    e->rhs = b.node_;
    return Reaction(std::move(e));
}

Reaction operator*(const Reaction& a, const Reaction& b) {
    auto e = make_node(Op::Mul);
    e->lhs = a.node_;
    e->rhs = b.node_;
    return Reaction(std::move(e));
}

Reaction operator-(const Reaction& a) { return Reaction::constant(0.0) - a; }

Reaction pow(const Reaction& a, int n) {
    auto e = make_node(Op::Pow);
    e->exponent = n;
    e->lhs = a.node_;
    return Reaction(std::move(e));
}

Reaction exp(const Reaction& a) {
    auto e = make_node(Op::Exp);
    e->lhs = a.node_;
    return Reaction(std::move(e));
}

Reaction sin(const Reaction& a) {
    auto e = make_node(Op::Sin);
    e->lhs = a.node_;
    return Reaction(std::move(e));
}

Reaction cos(const Reaction& a) {
    auto e = make_node(Op::Cos);
    e->lhs = a.node_;
    return Reaction(std::move(e));
}

Reaction atan(const Reaction& a) {
    auto e = make_node(Op::Atan);
    e->lhs = a.node_;
    return Reaction(std::move(e));
}

}  // namespace vadm
