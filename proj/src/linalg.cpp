#include "ncomplex/linalg.hpp"

#include <algorithm>

#include "ncomplex/errors.hpp"

namespace ncx {

namespace {

void axpy(IdxMap& v, const Q& c, const IdxMap& row) {
    // v += c * row
    for (const auto& [k, q] : row) {
        auto it = v.find(k);
        if (it == v.end()) {
            v.emplace(k, c * q);
        } else {
            it->second += c * q;
            if (it->second == 0) v.erase(it);
        }
    }
}

void reduce(IdxMap& v, const std::vector<IdxMap>& rows, const std::vector<Tuple>& pivots) {
    for (size_t i = 0; i < rows.size(); ++i) {
        auto it = v.find(pivots[i]);
        if (it == v.end()) continue;
        Q c = -it->second;
        axpy(v, c, rows[i]);
    }
}

}  // namespace

bool SparseRref::insert(IdxMap v) {
    reduce(v, rows_, pivots_);
    if (v.empty()) return false;
    // lexicographically smallest support element becomes the pivot
    Tuple piv = v.begin()->first;
    Q lead = v.begin()->second;
    for (auto& [k, q] : v) q /= lead;
    // eliminate the new pivot from existing rows to stay fully reduced
    for (auto& row : rows_) {
        auto it = row.find(piv);
        if (it == row.end()) continue;
        Q c = -it->second;
        axpy(row, c, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t i = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + i, std::move(v));
    return true;
}

std::optional<std::vector<Q>> SparseRref::coords(const IdxMap& v) const {
    // full reduction means the coefficient of row i is just v at row i's pivot
    std::vector<Q> c(rows_.size());
    IdxMap rem = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = rem.find(pivots_[i]);
        if (it == rem.end()) continue;
        c[i] = it->second;
        axpy(rem, -c[i], rows_[i]);
    }
    if (!rem.empty()) return std::nullopt;
    return c;
}

MatQ MatQ::zero(int r, int c) {
    MatQ m;
    m.nrows = r;
    m.ncols = c;
    m.a.assign(r, std::vector<Q>(c, Q(0)));
    return m;
}

MatQ mat_mul(const MatQ& A, const MatQ& B) {
    require(A.ncols == B.nrows, "matrix shape mismatch in product");
    MatQ C = MatQ::zero(A.nrows, B.ncols);
    for (int i = 0; i < A.nrows; ++i) {
        for (int k = 0; k < A.ncols; ++k) {
            const Q& aik = A.a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < B.ncols; ++j) {
                if (B.a[k][j] == 0) continue;
                C.a[i][j] += aik * B.a[k][j];
            }
        }
    }
    return C;
}

std::vector<Q> mat_vec(const MatQ& A, const std::vector<Q>& x) {
    require(static_cast<int>(x.size()) == A.ncols, "vector length mismatch");
    std::vector<Q> y(A.nrows, Q(0));
    for (int i = 0; i < A.nrows; ++i)
        for (int j = 0; j < A.ncols; ++j)
            if (A.a[i][j] != 0 && x[j] != 0) y[i] += A.a[i][j] * x[j];
    return y;
}

bool is_zero(const MatQ& A) {
    for (const auto& row : A.a)
        for (const auto& q : row)
            if (q != 0) return false;
    return true;
}

int rank_of(MatQ A) {
    int rank = 0;
    for (int col = 0; col < A.ncols && rank < A.nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < A.nrows; ++r) {
            if (A.a[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(A.a[rank], A.a[piv]);
        Q lead = A.a[rank][col];
        for (int r = rank + 1; r < A.nrows; ++r) {
            if (A.a[r][col] == 0) continue;
            Q f = A.a[r][col] / lead;
            for (int c = col; c < A.ncols; ++c) A.a[r][c] -= f * A.a[rank][c];
        }
        ++rank;
    }
    return rank;
}

RrefFactor factor(const MatQ& A) {
    RrefFactor F;
    F.nrows = A.nrows;
    F.ncols = A.ncols;
    const int n = A.nrows, m = A.ncols;
    F.R = A;
    F.E = MatQ::zero(n, n);
    for (int i = 0; i < n; ++i) F.E.a[i][i] = 1;
    auto& M = F.R.a;
    auto& E = F.E.a;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r) {
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(M[row], M[piv]);
        std::swap(E[row], E[piv]);
        Q lead = M[row][col];
        if (lead != 1) {
            for (int c = col; c < m; ++c) M[row][c] /= lead;
            for (int c = 0; c < n; ++c) E[row][c] /= lead;
        }
        for (int r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Q f = M[r][col];
            for (int c = col; c < m; ++c) M[r][c] -= f * M[row][c];
            for (int c = 0; c < n; ++c) E[r][c] -= f * E[row][c];
        }
        F.pivot_col.push_back(col);
        ++row;
    }
    F.rank = row;
    return F;
}

SolveResult RrefFactor::apply(const std::vector<Q>& b) const {
    require(static_cast<int>(b.size()) == nrows, "right-hand side length mismatch");
    const std::vector<Q> c = mat_vec(E, b);
    SolveResult res;
    // inconsistency: a zero row of the RREF paired with a nonzero reduced rhs
    for (int r = rank; r < nrows; ++r) {
        if (c[static_cast<size_t>(r)] != 0) {
            res.ok = false;
            res.left_null = E.a[static_cast<size_t>(r)];
            return res;
        }
    }
    res.ok = true;
    res.x.assign(static_cast<size_t>(ncols), Q(0));
    for (int i = 0; i < rank; ++i)
        res.x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = c[static_cast<size_t>(i)];
    return res;
}

SolveResult solve(const MatQ& A, const std::vector<Q>& b) {
    return factor(A).apply(b);
}

}  // namespace ncx
