#pragma once
/* Closed-form radial-integral potentials for the two classical low-degree
   cases: closed symmetric 3-tensors in the order-4 complex, and closed
   Riemann-symmetry 4-tensors in the order-3 complex. All line integrals are
   evaluated symbolically per homogeneous degree, so results are exact. */

#include "ncomplex/tensor.hpp"

namespace ncx {

// T symmetric of degree 3 with the cubed differential vanishing; returns a
// symmetric xi with the symmetrized gradient of xi equal to T
PolyTensor homotopy_symmetric3(const PolyTensor& T);

// R of the paired (2,2) type with dR = 0; returns symmetric h with
// riemann_from_potential(h) = R
PolyTensor homotopy_riemann(const PolyTensor& R);

// 4 * (double gradient of h, antisymmetrized over both derivative/index
// pairs); the curvature normalization the reconstruction identity uses
PolyTensor riemann_from_potential(const PolyTensor& h);

// coset agreement between the closed-form potential and the linear-solver
// potential: their difference must be annihilated by the inverted power of d
bool crosscheck_symmetric3(const PolyTensor& T);
bool crosscheck_riemann(const PolyTensor& R);

}  // namespace ncx
