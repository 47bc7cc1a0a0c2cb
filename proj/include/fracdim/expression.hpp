#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fracdim/fields.hpp"

namespace fracdim {

namespace detail {
struct ExprNode;
}

/// Syntax or unknown-identifier failure; offset is the 0-based byte position
/// in the original text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

// Immutable expression tree over the grammar: numbers, variables r and z,
// + - * / ^ (right-associative), parentheses, ln exp sin cos sqrt abs.
// Unary minus binds tighter than binary +/- and looser than ^.
class Expr {
public:
    Expr();  // the constant 0

    double eval(double r, double z = 0.0) const;
    double operator()(double r, double z = 0.0) const { return eval(r, z); }

    /// Exact symbolic derivative with respect to var ('r' or 'z').
    Expr derivative(char var = 'r') const;

    /// Constant folding plus identity elimination (x+0, x*1, x^1, ...).
    Expr simplified() const;

    /// Canonical text form; reparsing it yields a structurally identical tree.
    std::string str() const;

    bool uses(char var) const;

    explicit Expr(std::shared_ptr<const detail::ExprNode> node);
    const detail::ExprNode& node() const { return *node_; }

private:
    std::shared_ptr<const detail::ExprNode> node_;
};

bool structurally_equal(const Expr& a, const Expr& b);

Expr parse_expression(std::string_view text);

/// Compile a pure-r expression into a field with symbolic derivatives.
/// Expressions mentioning z are rejected here, not at evaluation time.
RadialScalarField to_radial_field(const Expr& e);
inline RadialScalarField to_radial_field(std::string_view text) {
    return to_radial_field(parse_expression(text));
}

/// Compile u_r(r,z), u_z(r,z) into an axial field with symbolic partials.
AxialField to_axial_field(const Expr& u_r, const Expr& u_z);

}  // namespace fracdim
