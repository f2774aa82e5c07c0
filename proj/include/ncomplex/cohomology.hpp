#pragma once
/* Generalized cohomology of the order-N complex: at each tensor degree p and
   homogeneous polynomial degree g, the quotient of the d^k kernel by the
   d^(N-k) image, with constructive preimages and independently checkable
   failure certificates. */

#include <vector>

#include "ncomplex/complex.hpp"

namespace ncx {

struct CohomologyReport {
    int N = 2, D = 1, p = 0, k = 1, g = 0;
    long long dim_kernel = 0;
    long long rank_image = 0;
    long long dim_H = 0;
};

// dim_kernel = nullity of d^k out of (p, g); rank_image = rank of d^(N-k)
// into (p, g); dim_H their difference. Requires 1 <= k <= N-1.
CohomologyReport cohomology_dim(int N, int D, int p, int k, int g);

struct NoSolutionCert {
    int p = 0, g = 0;           // homogeneous component that has no preimage
    std::vector<Q> functional;  // annihilates the image, pairs nonzero with it
};

struct PreimageResult {
    bool ok = false;
    PolyTensor K;        // d^(N-k) K = R when ok
    NoSolutionCert why;  // populated when !ok
};

// Solves d^(N-k) K = R for a given d^k-closed R of degree p; K has degree
// p+k-N and polynomial degree raised by N-k. Throws precondition_error when
// R is not d^k-closed, which is a different situation from a clean NoSolution.
PreimageResult preimage_solve(int N, const PolyTensor& R, int k);

// every cell 0 <= p <= p_max, 1 <= k <= N-1, 0 <= g <= g_max, in that
// nesting order; deterministic regardless of thread count
std::vector<CohomologyReport> scan_cohomology(int N, int D, int p_max, int g_max);

}  // namespace ncx
