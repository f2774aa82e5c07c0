#pragma once
/* Epsilon-duality for symmetric 2-tensor fields: the double-epsilon image of
   a divergence-free tensor is closed in the order-3 complex at a full
   rectangular degree, which turns "T is a double divergence of a Riemann-type
   potential" into a solvable linear problem. */

#include "ncomplex/tensor.hpp"

namespace ncx {

// tau with 2(D-1) slots: both slots of T traded for epsilon complements;
// lands in the order-3 type space of its degree (asserted)
PolyTensor dualize_symmetric(const PolyTensor& T);

// rho with 2(D-2) slots back to a 4-tensor R with the paired (2,2) symmetry
// (asserted): each epsilon contributes two free slots
PolyTensor undualize(const PolyTensor& rho);

// T^{mn} = sum of second derivatives of R contracted into slots 0 and 2
PolyTensor double_divergence(const PolyTensor& R);

// contraction of the gradient with the first slot vanishes identically
bool is_divergence_free(const PolyTensor& T);

// Finds a (2,2)-type potential R with double_divergence(R) = T for a
// divergence-free symmetric T, normalized so the identity holds exactly
// (verified before returning). A solver failure is an invariant violation:
// the dual class always vanishes.
PolyTensor divergence_free_potential(const PolyTensor& T);

}  // namespace ncx
