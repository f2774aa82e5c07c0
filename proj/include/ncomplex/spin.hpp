#pragma once
/* Free higher-spin gauge fields on R^D: a spin-S field is a symmetric
   S-tensor living in the order-(S+1) complex. Its curvature is the S-th
   power of d (a two-row rectangle of width S), gauge transformations shift
   the field by the differential of a symmetric (S-1)-tensor, and both
   reconstruction directions reduce to preimage problems the complex solves. */

#include "ncomplex/tensor.hpp"

namespace ncx {

struct SpinField {
    int S = 1;
    PolyTensor h;  // symmetric S-tensor
};

SpinField make_spin_field(int S, PolyTensor h);

// field shifted by the symmetrized gradient of eps (a symmetric (S-1)-tensor)
SpinField gauge_transform(const SpinField& field, const PolyTensor& eps);

// R = d^S h in the order-(S+1) complex
PolyTensor curvature(const SpinField& field);

// curvature(gauge_transform(field, eps)) == curvature(field); always holds,
// and a mismatch aborts as an invariant violation
bool gauge_invariance_check(const SpinField& field, const PolyTensor& eps);

// dR = 0 for the given curvature-type tensor
bool bianchi_check(const PolyTensor& R, int S);

// for a field with zero curvature: eps with gauge_transform(zero, eps) = field
PolyTensor pure_gauge_reconstruct(const SpinField& field);

// for a d-closed curvature-type R: a field whose curvature is exactly R
SpinField curvature_characterization(const PolyTensor& R, int S);

}  // namespace ncx
