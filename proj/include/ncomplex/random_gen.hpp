#pragma once
/* Seeded random instances. The engine is the standard 64-bit Mersenne
   twister with modulo reduction, so a given seed produces the same tensor
   on every platform. */

#include <cstdint>
#include <random>

#include "ncomplex/tensor.hpp"

namespace ncx {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    long long pick(long long lo, long long hi);  // inclusive bounds
};

// member of the (N, p) symmetry type with random small integer coordinates
// at every polynomial degree <= g_max; never returns zero
PolyTensor random_typed(int N, int D, int p, int g_max, Rng& rng);

// fully symmetric tensor of the given rank
PolyTensor random_symmetric(int D, int degree, int g_max, Rng& rng);

// derivative of a random symmetric 2-tensor: closed input for the
// symmetric-3 homotopy
PolyTensor random_closed_symmetric3(int D, int g_max, Rng& rng);

struct RiemannSeed {
    PolyTensor R;   // linearized curvature built from h0
    PolyTensor h0;  // generating symmetric potential
};
RiemannSeed random_closed_riemann(int D, int g_max, Rng& rng);

// double divergence of a random window-type 4-tensor: symmetric and
// divergence free by construction
PolyTensor random_divergence_free(int D, int g_max, Rng& rng);

}  // namespace ncx
