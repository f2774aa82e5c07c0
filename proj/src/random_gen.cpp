#include "ncomplex/random_gen.hpp"

#include <algorithm>
#include <vector>

#include "ncomplex/complex.hpp"
#include "ncomplex/duality.hpp"
#include "ncomplex/errors.hpp"
#include "ncomplex/homotopy.hpp"

namespace ncx {

long long Rng::pick(long long lo, long long hi) {
    require(lo <= hi, "empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng() % span);
}

PolyTensor random_typed(int N, int D, int p, int g_max, Rng& rng) {
    require(g_max >= 0, "degree bound must be nonnegative");
    PolyTensor T(D, p);
    long long total = 0;
    for (int g = 0; g <= g_max; ++g) {
        const ComplexSpace& S = enumerate_space(N, D, p, g);
        total += S.dim();
        std::vector<Q> x(static_cast<size_t>(S.dim()));
        for (auto& c : x) c = Q(static_cast<long>(rng.pick(-9, 9)));
        T = add(T, from_coords(S, x));
    }
    require(total > 0, "no nonzero tensors exist with these parameters");
    if (T.is_zero()) {
        // every sampled coordinate happened to be zero; force one basis element
        for (int g = 0; g <= g_max && T.is_zero(); ++g) {
            const ComplexSpace& S = enumerate_space(N, D, p, g);
            if (S.dim() > 0) T = S.basis_element(0);
        }
    }
    return T;
}

PolyTensor random_symmetric(int D, int degree, int g_max, Rng& rng) {
    // with N > degree the maximal diagram at rank `degree` is one row
    return random_typed(std::max(2, degree + 1), D, degree, g_max, rng);
}

PolyTensor random_closed_symmetric3(int D, int g_max, Rng& rng) {
    const PolyTensor xi0 = random_symmetric(D, 2, g_max, rng);
    return differential(4, xi0);
}

RiemannSeed random_closed_riemann(int D, int g_max, Rng& rng) {
    RiemannSeed s;
    s.h0 = random_symmetric(D, 2, g_max, rng);
    s.R = riemann_from_potential(s.h0);
    return s;
}

PolyTensor random_divergence_free(int D, int g_max, Rng& rng) {
    const PolyTensor R0 = random_typed(3, D, 4, g_max, rng);
    return double_divergence(R0);
}

}  // namespace ncx
