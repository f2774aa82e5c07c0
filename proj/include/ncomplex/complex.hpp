#pragma once
/* The order-N complex on R^D: typed spaces graded by (tensor degree p,
   homogeneous polynomial degree g), the differential d = Y_{p+1} o partial,
   its powers, and exact matrices of d^k on canonical bases.

   Basis conventions (fixed for reproducibility): the index basis is the
   row-reduced echelon form of the projector image, pivots chosen
   lexicographically; monomials of degree g are enumerated in lexicographic
   ascending order; the space basis is ordered index-major. */

#include <memory>
#include <vector>

#include "ncomplex/linalg.hpp"
#include "ncomplex/tensor.hpp"
#include "ncomplex/young.hpp"

namespace ncx {

struct IndexBasis {
    Rows rows;
    int D = 1;
    SparseRref rref;  // canonical independent spanning set of the projector image
};

// cached; rank always equals the hook-content dimension
const IndexBasis& index_basis(const Rows& rows, int D);

struct ComplexSpace {
    int N = 2, D = 1, p = 0, g = 0;
    Rows rows;                     // diagram for (N, p)
    const IndexBasis* index = nullptr;
    std::vector<Expo> monomials;   // degree-g monomials, lex ascending

    long long index_dim() const { return index ? index->rref.rank() : 0; }
    long long dim() const { return index_dim() * static_cast<long long>(monomials.size()); }
    PolyTensor basis_element(long long i) const;  // index-major ordering
};

// cached and deterministic; empty when the diagram's first column exceeds D
const ComplexSpace& enumerate_space(int N, int D, int p, int g);

// d = (projector for degree p+1) o partial; checks membership of T first
PolyTensor differential(int N, const PolyTensor& T);

// k-fold differential
PolyTensor d_power(int N, const PolyTensor& T, int k);

bool is_typed_member(int N, const PolyTensor& T);

// coordinates of a member tensor, homogeneous of the space's degree
std::vector<Q> coords_in_space(const ComplexSpace& S, const PolyTensor& T);
PolyTensor from_coords(const ComplexSpace& S, const std::vector<Q>& x);

struct DifferentialMatrix {
    int N = 2, D = 1, p = 0, g = 0, k = 1;
    long long source_dim = 0, target_dim = 0;  // target is zero-dim when g < k
    MatQ matrix;                               // target_dim x source_dim
};

// exact matrix of d^k from (p, g) to (p+k, g-k); cached
const DifferentialMatrix& matrix_of_d_power(int N, int D, int p, int g, int k);

}  // namespace ncx
