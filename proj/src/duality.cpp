#include "ncomplex/duality.hpp"

#include <vector>

#include "ncomplex/cohomology.hpp"
#include "ncomplex/complex.hpp"
#include "ncomplex/errors.hpp"

namespace ncx {
namespace {

std::vector<int> first_slots(int n) {
    std::vector<int> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

}  // namespace

PolyTensor dualize_symmetric(const PolyTensor& T) {
    validate(T);
    require(T.D >= 2, "dimension must be at least 2");
    require(T.degree == 2, "input must be a 2-tensor");
    require(is_typed_member(3, T), "input must be symmetric");
    // one epsilon per slot; each contraction appends D-1 complementary slots
    PolyTensor tau = epsilon_contract(epsilon_contract(T, {0}), {0});
    ensure(is_typed_member(3, tau), "dual tensor left its type space");
    return tau;
}

PolyTensor undualize(const PolyTensor& rho) {
    validate(rho);
    const int D = rho.D;
    require(D >= 2, "dimension must be at least 2");
    require(rho.degree == 2 * (D - 2), "input degree must match the dual complement");
    require(is_typed_member(3, rho), "input does not have the expected symmetry type");
    // the epsilon complement of each (D-2)-slot group restores one
    // antisymmetric pair; slot blocks come out in pair order
    const std::vector<int> grp = first_slots(D - 2);
    PolyTensor R = epsilon_contract(epsilon_contract(rho, grp), grp);
    ensure(is_typed_member(3, R), "undualized tensor misses the paired symmetry");
    return R;
}

PolyTensor double_divergence(const PolyTensor& R) {
    validate(R);
    require(R.degree == 4, "input must be a 4-tensor");
    const PolyTensor dd = partial_derivative(partial_derivative(R));
    return trace_contract(trace_contract(dd, 0, 2), 0, 2);
}

bool is_divergence_free(const PolyTensor& T) {
    validate(T);
    require(T.degree >= 1, "input must carry at least one slot");
    return trace_contract(partial_derivative(T), 0, 1).is_zero();
}

PolyTensor divergence_free_potential(const PolyTensor& T) {
    validate(T);
    require(T.D >= 2, "dimension must be at least 2");
    require(T.degree == 2, "input must be a 2-tensor");
    require(is_typed_member(3, T), "input must be symmetric");
    require(is_divergence_free(T), "input is not divergence free");
    if (T.is_zero()) return PolyTensor(T.D, 4);

    // divergence freedom makes the dual closed, and its degree 2(D-1) is a
    // full rectangle, so a second-power preimage always exists
    const PolyTensor tau = dualize_symmetric(T);
    PreimageResult pr = preimage_solve(3, tau, 1);
    ensure(pr.ok, "dual potential solve failed although the class must vanish");
    const PolyTensor R_raw = undualize(pr.K);
    const PolyTensor T_raw = double_divergence(R_raw);

    // the epsilon chain fixes the answer only up to one rational constant per
    // dimension; measure it on the input and normalize
    ensure(!T_raw.is_zero(), "dual pipeline collapsed to zero");
    const auto& [k0, c0] = *T.terms.begin();
    Q c_raw(0);
    auto it = T_raw.terms.find(k0);
    if (it != T_raw.terms.end()) c_raw = it->second;
    ensure(c_raw != 0, "dual pipeline output is not proportional to the input");
    const Q kappa = c_raw / c0;
    PolyTensor R = scale(R_raw, Q(1) / kappa);
    ensure(double_divergence(R) == T, "potential identity failed on output");
    return R;
}

}  // namespace ncx
