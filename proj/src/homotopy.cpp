#include "ncomplex/homotopy.hpp"

#include "ncomplex/cohomology.hpp"
#include "ncomplex/complex.hpp"
#include "ncomplex/errors.hpp"

namespace ncx {
namespace {

// weight-one antisymmetrization of one slot pair
PolyTensor anti_pair(const PolyTensor& T, int a, int b) {
    return scale(sub(T, swap_slots(T, a, b)), Q(1, 2));
}

}  // namespace

PolyTensor homotopy_symmetric3(const PolyTensor& T) {
    validate(T);
    require(T.degree == 3, "input must be a 3-tensor");
    require(is_typed_member(4, T), "input must be fully symmetric");
    require(d_power(4, T, 3).is_zero(), "input is not annihilated by the third power of d");

    // first piece: one radial weight, one coordinate contraction
    PolyTensor xi = contract_with_x(radial_rescale_integral(T, 1), 2);

    // second piece: the two first-derivative pair differences, two radial
    // weights, contractions on the last original slot and the derivative slot
    const PolyTensor U = partial_derivative(T);
    PolyTensor W = add(anti_pair(U, 0, 1), anti_pair(U, 0, 2));
    W = radial_rescale_integral(W, 2);
    W = contract_with_x(contract_with_x(W, 3), 0);
    xi = add(xi, W);

    // third piece: both second-derivative slots antisymmetrized against index
    // slots, three radial weights, three contractions; closes with weight 4
    PolyTensor V = partial_derivative(U);
    V = anti_pair(anti_pair(V, 1, 2), 0, 3);
    V = radial_rescale_integral(V, 3);
    V = contract_with_x(contract_with_x(contract_with_x(V, 4), 0), 0);
    xi = add(xi, scale(V, Q(4)));

    ensure(is_typed_member(4, xi), "potential lost the symmetric type");
    return xi;
}

PolyTensor homotopy_riemann(const PolyTensor& R) {
    validate(R);
    require(R.degree == 4, "input must be a 4-tensor");
    require(is_typed_member(3, R), "input must have the paired (2,2) symmetry");
    require(d_power(3, R, 1).is_zero(), "input is not closed");

    // double radial weight with one extra line power, then contract the
    // second slot of each antisymmetric pair
    PolyTensor h = radial_rescale_integral(R, 2, 1);
    h = contract_with_x(contract_with_x(h, 3), 1);
    ensure(is_typed_member(3, h), "potential lost the symmetric type");
    return h;
}

PolyTensor riemann_from_potential(const PolyTensor& h) {
    validate(h);
    require(h.degree == 2, "input must be a 2-tensor");
    require(is_typed_member(3, h), "input must be symmetric");
    const PolyTensor dd = partial_derivative(partial_derivative(h));
    PolyTensor X = anti_pair(anti_pair(dd, 1, 2), 0, 3);
    X = reorder_slots(X, {3, 1, 0, 2});
    return scale(X, Q(4));
}

bool crosscheck_symmetric3(const PolyTensor& T) {
    const PolyTensor xi = homotopy_symmetric3(T);
    PreimageResult pr = preimage_solve(4, T, 3);
    ensure(pr.ok, "solver failed although the class must vanish");
    return d_power(4, sub(xi, pr.K), 1).is_zero();
}

bool crosscheck_riemann(const PolyTensor& R) {
    const PolyTensor h = homotopy_riemann(R);
    PreimageResult pr = preimage_solve(3, R, 1);
    ensure(pr.ok, "solver failed although the class must vanish");
    // the closed form solves the reconstruction identity, whose normalization
    // differs from the bare d^2 preimage by the fixed factor -6
    return d_power(3, sub(scale(h, Q(-6)), pr.K), 2).is_zero();
}

}  // namespace ncx
