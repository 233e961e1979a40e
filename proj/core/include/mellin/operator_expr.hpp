#ifndef MELLIN_OPERATOR_EXPR_HPP
#define MELLIN_OPERATOR_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "mellin/diff_op.hpp"

namespace mellin {

// Abstract syntax for operator expressions. Multiplication is
// order-preserving: the algebra is noncommutative.
struct OperatorExpr {
    enum class Node { Add, Sub, Mul, Pow, Atom };
    enum class AtomKind { Z, ZInv, T, D, Number };

    Node node = Node::Atom;
    AtomKind atom = AtomKind::Number;
    Rational value;        // Atom/Number
    int exponent = 0;      // Pow
    std::vector<OperatorExpr> children;

    static OperatorExpr atomNode(AtomKind kind) {
        OperatorExpr e;
        e.node = Node::Atom;
        e.atom = kind;
        return e;
    }
    static OperatorExpr number(const Rational& v) {
        OperatorExpr e = atomNode(AtomKind::Number);
        e.value = v;
        return e;
    }
    static OperatorExpr binary(Node op, OperatorExpr lhs, OperatorExpr rhs) {
        OperatorExpr e;
        e.node = op;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }
    static OperatorExpr power(OperatorExpr base, int exp) {
        OperatorExpr e;
        e.node = Node::Pow;
        e.exponent = exp;
        e.children.push_back(std::move(base));
        return e;
    }

    bool operator==(const OperatorExpr& o) const {
        if (node != o.node) return false;
        if (node == Node::Atom)
            return atom == o.atom && (atom != AtomKind::Number || value == o.value);
        if (node == Node::Pow && exponent != o.exponent) return false;
        return children == o.children;
    }
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := 'z' | 'T' | 'd' | rational | '(' expr ')'
// 'T' denotes z d/dz and 'd' denotes d/dz; juxtaposition is not
// multiplication. Throws SyntaxError with a byte offset and the tokens that
// would have been accepted.
OperatorExpr parseOperator(const std::string& text);

// Evaluates the AST in the skew algebra (d-form for the arithmetic, then
// normal-ordered T-form). Negative powers are only defined on invertible
// monomials c*z^r.
DiffOp elaborate(const OperatorExpr& expr);

// Grammar-valid rendering; parse(printExpr(parse(s))) == parse(s).
std::string printExpr(const OperatorExpr& expr);

// Convenience: parse then elaborate.
DiffOp parseToOperator(const std::string& text);

}  // namespace mellin

#endif
