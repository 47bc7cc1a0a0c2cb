#include "fracdim/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

namespace fracdim {

namespace detail {

enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };

struct ExprNode {
    Kind kind;
    double value = 0.0;  // number
    char var = 'r';      // variable
    int func = -1;       // call, index into kFuncs
    std::shared_ptr<const ExprNode> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

struct FuncDef {
    const char* name;
    double (*fn)(double);
};

double fn_ln(double x) { return std::log(x); }
double fn_exp(double x) { return std::exp(x); }
double fn_sin(double x) { return std::sin(x); }
double fn_cos(double x) { return std::cos(x); }
double fn_sqrt(double x) { return std::sqrt(x); }
double fn_abs(double x) { return std::fabs(x); }

constexpr FuncDef kFuncs[] = {
    {"ln", fn_ln}, {"exp", fn_exp},   {"sin", fn_sin},
    {"cos", fn_cos}, {"sqrt", fn_sqrt}, {"abs", fn_abs},
};
constexpr int kFuncCount = static_cast<int>(sizeof(kFuncs) / sizeof(kFuncs[0]));

NodePtr make_num(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::number;
    n->value = v == 0.0 ? 0.0 : v;  // normalize -0
    return n;
}

NodePtr make_var(char c) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::variable;
    n->var = c;
    return n;
}

NodePtr make_unary(Kind k, NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    return n;
}

NodePtr make_bin(Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_call(int func, NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::call;
    n->func = func;
    n->a = std::move(a);
    return n;
}

bool is_num(const NodePtr& n, double v) {
    return n->kind == Kind::number && n->value == v;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr run() {
        NodePtr e = parse_add();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) {
        throw ParseError(msg + " at offset " + std::to_string(at), at);
    }
    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr parse_add() {
        NodePtr e = parse_mul();
        for (;;) {
            if (accept('+'))
                e = make_bin(Kind::add, e, parse_mul());
            else if (accept('-'))
                e = make_bin(Kind::sub, e, parse_mul());
            else
                return e;
        }
    }

    NodePtr parse_mul() {
        NodePtr e = parse_unary();
        for (;;) {
            if (accept('*'))
                e = make_bin(Kind::mul, e, parse_unary());
            else if (accept('/'))
                e = make_bin(Kind::div, e, parse_unary());
            else
                return e;
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) {
            NodePtr inner = parse_unary();
            // Fold a sign applied directly to a literal so that "-3" is one
            // number node; keeps printing and reparsing in agreement.
            if (inner->kind == Kind::number) return make_num(-inner->value);
            return make_unary(Kind::negate, inner);
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) return make_bin(Kind::pow, base, parse_unary());
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_add();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        const std::string tail(s_.substr(pos_));  // strtod needs a terminated buffer
        char* end = nullptr;
        const double v = std::strtod(tail.c_str(), &end);
        if (end == tail.c_str()) fail("malformed number");
        const std::size_t start = pos_;
        pos_ += static_cast<std::size_t>(end - tail.c_str());
        if (!std::isfinite(v)) fail("number out of range", start);
        return make_num(v);
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        if (name == "r" || name == "z") return make_var(name[0]);
        for (int i = 0; i < kFuncCount; ++i) {
            if (name == kFuncs[i].name) {
                if (!accept('(')) fail("expected '(' after function name");
                NodePtr arg = parse_add();
                if (!accept(')')) fail("expected ')'");
                return make_call(i, arg);
            }
        }
        fail("unknown identifier '" + name + "'", start);
    }
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double eval_node(const ExprNode& n, double r, double z) {
    switch (n.kind) {
        case Kind::number: return n.value;
        case Kind::variable: return n.var == 'r' ? r : z;
        case Kind::negate: return -eval_node(*n.a, r, z);
        case Kind::add: return eval_node(*n.a, r, z) + eval_node(*n.b, r, z);
        case Kind::sub: return eval_node(*n.a, r, z) - eval_node(*n.b, r, z);
        case Kind::mul: return eval_node(*n.a, r, z) * eval_node(*n.b, r, z);
        case Kind::div: return eval_node(*n.a, r, z) / eval_node(*n.b, r, z);
        case Kind::pow: return std::pow(eval_node(*n.a, r, z), eval_node(*n.b, r, z));
        case Kind::call: return kFuncs[n.func].fn(eval_node(*n.a, r, z));
    }
    return 0.0;  // unreachable
}

// ---------------------------------------------------------------------------
// Symbolic derivative
// ---------------------------------------------------------------------------

NodePtr diff(const NodePtr& n, char var);

NodePtr diff_call(const NodePtr& n, char var) {
    const NodePtr& u = n->a;
    NodePtr du = diff(u, var);
    switch (n->func) {
        case 0:  // ln
            return make_bin(Kind::div, du, u);
        case 1:  // exp
            return make_bin(Kind::mul, du, n);
        case 2:  // sin
            return make_bin(Kind::mul, du, make_call(3, u));
        case 3:  // cos
            return make_unary(Kind::negate, make_bin(Kind::mul, du, make_call(2, u)));
        case 4:  // sqrt
            return make_bin(Kind::div, du, make_bin(Kind::mul, make_num(2.0), n));
        case 5:  // abs: u' * u / abs(u), the sign written within the grammar
            return make_bin(Kind::div, make_bin(Kind::mul, u, du), n);
    }
    return make_num(0.0);  // unreachable
}

NodePtr diff_pow(const NodePtr& n, char var) {
    const NodePtr& u = n->a;
    const NodePtr& v = n->b;
    if (v->kind == Kind::number) {
        // c * u^(c-1) * u'
        NodePtr p = make_bin(Kind::pow, u, make_num(v->value - 1.0));
        return make_bin(Kind::mul, make_bin(Kind::mul, make_num(v->value), p), diff(u, var));
    }
    if (u->kind == Kind::number) {
        // u^v * ln(u) * v'
        return make_bin(Kind::mul, make_bin(Kind::mul, n, make_call(0, u)), diff(v, var));
    }
    // u^v * (v' ln u + v u'/u)
    NodePtr t1 = make_bin(Kind::mul, diff(v, var), make_call(0, u));
    NodePtr t2 = make_bin(Kind::div, make_bin(Kind::mul, v, diff(u, var)), u);
    return make_bin(Kind::mul, n, make_bin(Kind::add, t1, t2));
}

NodePtr diff(const NodePtr& n, char var) {
    switch (n->kind) {
        case Kind::number: return make_num(0.0);
        case Kind::variable: return make_num(n->var == var ? 1.0 : 0.0);
        case Kind::negate: return make_unary(Kind::negate, diff(n->a, var));
        case Kind::add: return make_bin(Kind::add, diff(n->a, var), diff(n->b, var));
        case Kind::sub: return make_bin(Kind::sub, diff(n->a, var), diff(n->b, var));
        case Kind::mul:
            return make_bin(Kind::add, make_bin(Kind::mul, diff(n->a, var), n->b),
                            make_bin(Kind::mul, n->a, diff(n->b, var)));
        case Kind::div:
            return make_bin(
                Kind::div,
                make_bin(Kind::sub, make_bin(Kind::mul, diff(n->a, var), n->b),
                         make_bin(Kind::mul, n->a, diff(n->b, var))),
                make_bin(Kind::pow, n->b, make_num(2.0)));
        case Kind::pow: return diff_pow(n, var);
        case Kind::call: return diff_call(n, var);
    }
    return make_num(0.0);  // unreachable
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

NodePtr fold_if_finite(const NodePtr& fallback, double v) {
    return std::isfinite(v) ? make_num(v) : fallback;
}

NodePtr simplify_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::number:
        case Kind::variable: return n;
        case Kind::negate: {
            NodePtr a = simplify_node(n->a);
            if (a->kind == Kind::number) return make_num(-a->value);
            if (a->kind == Kind::negate) return a->a;
            return make_unary(Kind::negate, a);
        }
        case Kind::call: {
            NodePtr a = simplify_node(n->a);
            NodePtr out = make_call(n->func, a);
            if (a->kind == Kind::number)
                return fold_if_finite(out, kFuncs[n->func].fn(a->value));
            return out;
        }
        default: break;
    }
    NodePtr a = simplify_node(n->a);
    NodePtr b = simplify_node(n->b);
    const bool na = a->kind == Kind::number;
    const bool nb = b->kind == Kind::number;
    NodePtr out = make_bin(n->kind, a, b);
    switch (n->kind) {
        case Kind::add:
            if (is_num(a, 0.0)) return b;
            if (is_num(b, 0.0)) return a;
            if (na && nb) return fold_if_finite(out, a->value + b->value);
            break;
        case Kind::sub:
            if (is_num(b, 0.0)) return a;
            if (is_num(a, 0.0)) return simplify_node(make_unary(Kind::negate, b));
            if (na && nb) return fold_if_finite(out, a->value - b->value);
            break;
        case Kind::mul:
            if (is_num(a, 0.0) || is_num(b, 0.0)) return make_num(0.0);
            if (is_num(a, 1.0)) return b;
            if (is_num(b, 1.0)) return a;
            if (na && nb) return fold_if_finite(out, a->value * b->value);
            break;
        case Kind::div:
            if (is_num(a, 0.0) && !is_num(b, 0.0)) return make_num(0.0);
            if (is_num(b, 1.0)) return a;
            if (na && nb && b->value != 0.0)
                return fold_if_finite(out, a->value / b->value);
            break;
        case Kind::pow:
            if (is_num(b, 0.0)) return make_num(1.0);
            if (is_num(b, 1.0)) return a;
            if (is_num(a, 1.0)) return make_num(1.0);
            if (na && nb) return fold_if_finite(out, std::pow(a->value, b->value));
            break;
        default: break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical printing. Precedence: add/sub 1, mul/div 2, negate 3, pow 4,
// atoms 5. Negative literals print with a leading sign, so they carry the
// negate precedence.
// ---------------------------------------------------------------------------

int precedence(const ExprNode& n) {
    switch (n.kind) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::negate: return 3;
        case Kind::pow: return 4;
        case Kind::number: return n.value < 0.0 ? 3 : 5;
        default: return 5;
    }
}

void print_node(const ExprNode& n, std::string& out, int min_prec) {
    const int prec = precedence(n);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case Kind::number: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += buf;
            break;
        }
        case Kind::variable: out += n.var; break;
        case Kind::negate:
            if (n.a->kind == Kind::number) {
                // collapse to a signed literal, matching the parser's folding
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", -n.a->value);
                out += buf;
            } else {
                out += '-';
                print_node(*n.a, out, 3);
            }
            break;
        case Kind::add:
        case Kind::sub:
            print_node(*n.a, out, 1);
            out += n.kind == Kind::add ? '+' : '-';
            print_node(*n.b, out, 2);
            break;
        case Kind::mul:
        case Kind::div:
            print_node(*n.a, out, 2);
            out += n.kind == Kind::mul ? '*' : '/';
            print_node(*n.b, out, 3);
            break;
        case Kind::pow:
            print_node(*n.a, out, 5);
            out += '^';
            print_node(*n.b, out, 3);
            break;
        case Kind::call:
            out += kFuncs[n.func].name;
            out += '(';
            print_node(*n.a, out, 0);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

bool equal_nodes(const ExprNode& x, const ExprNode& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Kind::number: return x.value == y.value;
        case Kind::variable: return x.var == y.var;
        case Kind::negate: return equal_nodes(*x.a, *y.a);
        case Kind::call: return x.func == y.func && equal_nodes(*x.a, *y.a);
        default: return equal_nodes(*x.a, *y.a) && equal_nodes(*x.b, *y.b);
    }
}

bool uses_node(const ExprNode& n, char var) {
    switch (n.kind) {
        case Kind::number: return false;
        case Kind::variable: return n.var == var;
        case Kind::negate:
        case Kind::call: return uses_node(*n.a, var);
        default: return uses_node(*n.a, var) || uses_node(*n.b, var);
    }
}

}  // namespace
}  // namespace detail

using detail::ExprNode;

Expr::Expr() : node_(detail::make_num(0.0)) {}
Expr::Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

double Expr::eval(double r, double z) const { return detail::eval_node(*node_, r, z); }

Expr Expr::derivative(char var) const { return Expr(detail::diff(node_, var)); }

Expr Expr::simplified() const { return Expr(detail::simplify_node(node_)); }

std::string Expr::str() const {
    std::string out;
    detail::print_node(*node_, out, 0);
    return out;
}

bool Expr::uses(char var) const { return detail::uses_node(*node_, var); }

bool structurally_equal(const Expr& a, const Expr& b) {
    return detail::equal_nodes(a.node(), b.node());
}

Expr parse_expression(std::string_view text) {
    if (text.empty()) throw ParseError("empty expression", 0);
    return Expr(detail::Parser(text).run());
}

RadialScalarField to_radial_field(const Expr& e) {
    if (e.uses('z'))
        throw std::invalid_argument("expression depends on z; a radial field takes r only");
    Expr f = e.simplified();
    Expr d1 = f.derivative('r').simplified();
    Expr d2 = d1.derivative('r').simplified();
    return RadialScalarField([f](double r) { return f.eval(r); },
                             [d1](double r) { return d1.eval(r); },
                             [d2](double r) { return d2.eval(r); });
}

AxialField to_axial_field(const Expr& u_r, const Expr& u_z) {
    Expr ur = u_r.simplified();
    Expr uz = u_z.simplified();
    Expr dur_dz = ur.derivative('z').simplified();
    Expr duz_dr = uz.derivative('r').simplified();
    return AxialField([ur](double r, double z) { return ur.eval(r, z); },
                      [uz](double r, double z) { return uz.eval(r, z); },
                      [dur_dz](double r, double z) { return dur_dz.eval(r, z); },
                      [duz_dr](double r, double z) { return duz_dr.eval(r, z); });
}

}  // namespace fracdim
