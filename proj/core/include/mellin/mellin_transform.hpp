#ifndef MELLIN_MELLIN_TRANSFORM_HPP
#define MELLIN_MELLIN_TRANSFORM_HPP

#include "mellin/diff_op.hpp"
#include "mellin/diffnce_op.hpp"
#include "mellin/newton_polygon.hpp"

namespace mellin {

// The algebra map z -> Phi, z d/dz -> -eta, applied monomial-wise in the
// original factor order and then normal-ordered in k[eta]<Phi, Phi^-1>.
// A ring homomorphism: [Phi, eta] = Phi is the image of the Weyl bracket.
DiffnceOp mellin(const DiffOp& P);

// Cyclic presentation of the germ at infinity: left-multiplies by the unit
// Phi^(-r) so the minimal Phi-degree is 0. Polygons of the result are read
// in the theta view (v = -deg_eta), which is exact.
DiffnceOp germAtInfinityOp(const DiffnceOp& N);

struct RotationCheck {
    NewtonPolygon lhs;  // polygon of the Mellin transform's germ at infinity
    NewtonPolygon rhs;  // global polygon rotated ninety degrees clockwise
    bool equal;
};

// The two sides are computed through disjoint code paths: difference
// normal-ordering on the left, T-form half-lines plus rotation on the right.
RotationCheck checkRotation(const DiffOp& P);

}  // namespace mellin

#endif
