#include "ncomplex/spin.hpp"

#include "ncomplex/cohomology.hpp"
#include "ncomplex/complex.hpp"
#include "ncomplex/errors.hpp"

namespace ncx {
namespace {

void check_spin(int S) { require(S >= 1, "spin must be a positive integer"); }

}  // namespace

SpinField make_spin_field(int S, PolyTensor h) {
    check_spin(S);
    validate(h);
    require(h.degree == S, "field degree must equal the spin");
    require(is_typed_member(S + 1, h), "field must be fully symmetric");
    return SpinField{S, std::move(h)};
}

SpinField gauge_transform(const SpinField& field, const PolyTensor& eps) {
    check_spin(field.S);
    validate(eps);
    require(eps.degree == field.S - 1, "gauge parameter degree must be one less than the spin");
    require(eps.D == field.h.D, "gauge parameter dimension mismatch");
    require(is_typed_member(field.S + 1, eps), "gauge parameter must be fully symmetric");
    // at degree S-1 the next type is a single row, so d is exactly the
    // weight-one symmetrized gradient
    return SpinField{field.S, add(field.h, differential(field.S + 1, eps))};
}

PolyTensor curvature(const SpinField& field) {
    check_spin(field.S);
    return d_power(field.S + 1, field.h, field.S);
}

bool gauge_invariance_check(const SpinField& field, const PolyTensor& eps) {
    const PolyTensor before = curvature(field);
    const PolyTensor after = curvature(gauge_transform(field, eps));
    ensure(before == after, "curvature changed under a gauge transformation");
    return true;
}

bool bianchi_check(const PolyTensor& R, int S) {
    check_spin(S);
    validate(R);
    require(R.degree == 2 * S, "curvature degree must be twice the spin");
    require(is_typed_member(S + 1, R), "input does not have the curvature symmetry type");
    return differential(S + 1, R).is_zero();
}

PolyTensor pure_gauge_reconstruct(const SpinField& field) {
    check_spin(field.S);
    require(curvature(field).is_zero(), "field has nonzero curvature");
    // degree S is a full rectangle in the order-(S+1) complex, so the d^S
    // kernel is exactly the image of d
    PreimageResult pr = preimage_solve(field.S + 1, field.h, field.S);
    ensure(pr.ok, "pure-gauge solve failed although the class must vanish");
    return pr.K;
}

SpinField curvature_characterization(const PolyTensor& R, int S) {
    require(bianchi_check(R, S), "input does not satisfy the closedness identity");
    // degree 2S is a full rectangle, so closed curvature-type tensors are
    // exactly the d^S images
    PreimageResult pr = preimage_solve(S + 1, R, 1);
    ensure(pr.ok, "curvature solve failed although the class must vanish");
    SpinField field{S, std::move(pr.K)};
    ensure(curvature(field) == R, "reconstructed field has the wrong curvature");
    return field;
}

}  // namespace ncx
