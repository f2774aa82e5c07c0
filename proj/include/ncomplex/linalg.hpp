#pragma once
/* Exact rational linear algebra: an incremental fully-reduced RREF over
   sparse vectors keyed by index tuples (used to canonicalize projector
   images), and a small dense solver with left-null certificates for
   inconsistent systems. Deterministic: pivots are chosen lexicographically. */

#include <optional>
#include <vector>

#include "ncomplex/tensor.hpp"
#include "ncomplex/young.hpp"

namespace ncx {

struct SparseRref {
    // invariant: rows_ fully reduced, pivot coefficient 1, sorted by pivot;
    // row i is zero at every pivot other than its own
    std::vector<IdxMap> rows_;
    std::vector<Tuple> pivots_;

    // reduces v against the current rows and inserts the remainder (if any)
    // as a new normalized row; returns true when the rank grew
    bool insert(IdxMap v);

    // coordinates of v in the row basis; nullopt if v lies outside the span
    std::optional<std::vector<Q>> coords(const IdxMap& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
};

struct MatQ {
    int nrows = 0, ncols = 0;
    std::vector<std::vector<Q>> a;  // row-major, nrows x ncols
    static MatQ zero(int r, int c);
};

MatQ mat_mul(const MatQ& A, const MatQ& B);
std::vector<Q> mat_vec(const MatQ& A, const std::vector<Q>& x);
bool is_zero(const MatQ& A);
int rank_of(MatQ A);  // destructive on the copy

struct SolveResult {
    bool ok = false;
    std::vector<Q> x;          // a solution of A x = b when ok
    std::vector<Q> left_null;  // y with y^T A = 0 and y^T b != 0 when !ok
};

// Fully reduced row echelon factorization with a row-operation tracker
// (R = E A), reusable across many right-hand sides
struct RrefFactor {
    int nrows = 0, ncols = 0, rank = 0;
    std::vector<int> pivot_col;  // size rank
    MatQ R;                      // RREF of A
    MatQ E;                      // nrows x nrows row-op tracker

    // solves A x = b; on failure left_null is the E-row certifying y^T A = 0,
    // y^T b != 0
    SolveResult apply(const std::vector<Q>& b) const;
};

RrefFactor factor(const MatQ& A);

// one-shot factor(A).apply(b)
SolveResult solve(const MatQ& A, const std::vector<Q>& b);

}  // namespace ncx
