#pragma once
/* Young diagrams and the idempotent symmetrizers that define tensors of a
   given symmetry type.

   Realization: P = c * (antisymmetrize within each column) o (symmetrize
   within each row), with tensor slots assigned to diagram cells column-major
   (first column top-to-bottom, then second column, ...). All symmetrizations
   are weight-one averages. The normalization c is the unique rational making
   P idempotent; it is computed in the group algebra of S_p and is independent
   of the ambient dimension D. */

#include <map>
#include <vector>

#include "ncomplex/rational.hpp"
#include "ncomplex/tensor.hpp"

namespace ncx {

using Rows = std::vector<int>;

struct YoungDiagram {
    Rows rows;  // weakly decreasing, entries >= 1; empty diagram = scalar type
    explicit YoungDiagram(Rows r);
    int cells() const;
};

// p = (N-1) n_p + r_p with 0 <= r_p <= N-2: n_p rows of N-1 cells plus a
// remainder row of r_p cells. Empty diagram for p = 0.
YoungDiagram diagram_for_degree(int N, int p);

// true iff (N-1) divides p
bool is_well_filled(int N, int p);

Rows conjugate(const Rows& rows);

// Weyl-module dimension by the hook content formula:
// prod over cells (D + j - i) / hook(i, j); zero iff first column exceeds D.
long long hook_dimension(const YoungDiagram& diagram, int D);

// slot assignment for a diagram, column-major
struct Layout {
    Rows rows;
    int p = 0;
    std::vector<std::vector<int>> row_groups;  // slots of each row
    std::vector<std::vector<int>> col_groups;  // slots of each column
};
Layout make_layout(const Rows& rows);

// sorts the values sitting inside each row group; projector columns depend
// on the input tuple only through this representative
Tuple row_canonical(const Layout& L, const Tuple& t);

// normalization making the projector idempotent (cached per diagram)
Q idempotence_constant(const Rows& rows);

using IdxMap = std::map<Tuple, Q>;

// column of the projector at basis tuple t, i.e. P e_t (cached per diagram/D)
const IdxMap& project_tuple(const Rows& rows, int D, const Tuple& t);

struct YoungProjector {
    YoungDiagram diagram;
    int D;
};

YoungProjector build_projector(const YoungDiagram& diagram, int D);

// applies P slot-wise to every term; idempotent by construction
PolyTensor apply_projector(const YoungProjector& P, const PolyTensor& T);

// membership in the symmetry type: T is a fixed point of its projector
bool is_member(const YoungProjector& P, const PolyTensor& T);

}  // namespace ncx
