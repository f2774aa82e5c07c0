#include "ncomplex/complex.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "ncomplex/errors.hpp"

namespace ncx {
namespace {

// one mutex for every cache in this translation unit; builders run unlocked,
// losers of an insert race drop their copy
std::mutex g_cache_mtx;

std::map<std::pair<Rows, int>, std::unique_ptr<IndexBasis>> g_index_cache;
std::map<std::tuple<int, int, int, int>, std::unique_ptr<ComplexSpace>> g_space_cache;

struct PrependTable {
    // coef[a][mu]: coordinates of P(e_mu (x) B_a) over the degree-(p+1) index basis
    std::vector<std::vector<std::vector<Q>>> coef;
};
std::map<std::tuple<int, int, int>, std::unique_ptr<PrependTable>> g_prepend_cache;

std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<DifferentialMatrix>> g_dmat_cache;

void accumulate(IdxMap& acc, const IdxMap& v, const Q& c) {
    for (const auto& [t, q] : v) {
        Q& slot = acc[t];
        slot += c * q;
        if (slot == 0) acc.erase(t);
    }
}

void check_common(int N, int D) {
    require(N >= 2, "complex order must be at least 2");
    require(D >= 1 && D <= 255, "dimension must be between 1 and 255");
}

const PrependTable& prepend_table(int N, int D, int p) {
    const std::tuple<int, int, int> key{N, D, p};
    {
        std::lock_guard<std::mutex> lk(g_cache_mtx);
        auto it = g_prepend_cache.find(key);
        if (it != g_prepend_cache.end()) return *it->second;
    }
    const Rows src_rows = diagram_for_degree(N, p).rows;
    const Rows tgt_rows = diagram_for_degree(N, p + 1).rows;
    const IndexBasis& SB = index_basis(src_rows, D);
    const IndexBasis& TB = index_basis(tgt_rows, D);
    auto tab = std::make_unique<PrependTable>();
    const int sdim = SB.rref.rank();
    tab->coef.assign(static_cast<size_t>(sdim),
                     std::vector<std::vector<Q>>(static_cast<size_t>(D)));
    for (int a = 0; a < sdim; ++a) {
        const IdxMap& row = SB.rref.rows_[static_cast<size_t>(a)];
        for (int mu = 0; mu < D; ++mu) {
            IdxMap v;
            for (const auto& [t, c] : row) {
                Tuple t2;
                t2.reserve(t.size() + 1);
                t2.push_back(static_cast<uint8_t>(mu));
                t2.insert(t2.end(), t.begin(), t.end());
                accumulate(v, project_tuple(tgt_rows, D, t2), c);
            }
            auto co = TB.rref.coords(v);
            ensure(co.has_value(), "differential image escaped the target symmetry type");
            tab->coef[static_cast<size_t>(a)][static_cast<size_t>(mu)] = std::move(*co);
        }
    }
    std::lock_guard<std::mutex> lk(g_cache_mtx);
    auto [it, fresh] = g_prepend_cache.try_emplace(key, std::move(tab));
    (void)fresh;
    return *it->second;
}

PolyTensor differential_unchecked(int N, const PolyTensor& T) {
    const YoungDiagram dia = diagram_for_degree(N, T.degree + 1);
    if (static_cast<int>(dia.rows.size()) > T.D) return PolyTensor(T.D, T.degree + 1);
    return apply_projector(build_projector(dia, T.D), partial_derivative(T));
}

std::unique_ptr<DifferentialMatrix> build_step(int N, int D, int p, int g) {
    auto M = std::make_unique<DifferentialMatrix>();
    M->N = N;
    M->D = D;
    M->p = p;
    M->g = g;
    M->k = 1;
    const ComplexSpace& src = enumerate_space(N, D, p, g);
    M->source_dim = src.dim();
    if (g < 1) {
        M->target_dim = 0;
        M->matrix = MatQ::zero(0, static_cast<int>(M->source_dim));
        return M;
    }
    const ComplexSpace& tgt = enumerate_space(N, D, p + 1, g - 1);
    M->target_dim = tgt.dim();
    M->matrix = MatQ::zero(static_cast<int>(M->target_dim), static_cast<int>(M->source_dim));
    if (M->target_dim == 0 || M->source_dim == 0) return M;

    const PrependTable& tab = prepend_table(N, D, p);
    const long long nm = static_cast<long long>(src.monomials.size());
    const long long nmt = static_cast<long long>(tgt.monomials.size());
    std::map<Expo, long long> tgt_mono;
    for (size_t i = 0; i < tgt.monomials.size(); ++i)
        tgt_mono[tgt.monomials[i]] = static_cast<long long>(i);
    const int sidx = src.index->rref.rank();
    const int tidx = tgt.index->rref.rank();
    for (int a = 0; a < sidx; ++a) {
        for (long long im = 0; im < nm; ++im) {
            const Expo& m = src.monomials[static_cast<size_t>(im)];
            const long long col = a * nm + im;
            for (int mu = 0; mu < D; ++mu) {
                if (m[static_cast<size_t>(mu)] == 0) continue;
                Expo m2 = m;
                --m2[static_cast<size_t>(mu)];
                const long long imt = tgt_mono.at(m2);
                const auto& co = tab.coef[static_cast<size_t>(a)][static_cast<size_t>(mu)];
                const Q f(static_cast<long>(m[static_cast<size_t>(mu)]));
                for (int b = 0; b < tidx; ++b) {
                    if (co[static_cast<size_t>(b)] == 0) continue;
                    M->matrix.a[static_cast<size_t>(b * nmt + imt)][static_cast<size_t>(col)] +=
                        f * co[static_cast<size_t>(b)];
                }
            }
        }
    }
    return M;
}

}  // namespace

const IndexBasis& index_basis(const Rows& rows, int D) {
    require(D >= 1 && D <= 255, "dimension must be between 1 and 255");
    const std::pair<Rows, int> key{rows, D};
    {
        std::lock_guard<std::mutex> lk(g_cache_mtx);
        auto it = g_index_cache.find(key);
        if (it != g_index_cache.end()) return *it->second;
    }
    auto B = std::make_unique<IndexBasis>();
    B->rows = rows;
    B->D = D;
    const YoungDiagram dia(rows);
    const int p = dia.cells();
    const long long want = hook_dimension(dia, D);
    if (want > 0) {
        // projector columns repeat across row-equivalent tuples, so scanning
        // row-canonical tuples in lex order visits every distinct column once
        const Layout L = make_layout(rows);
        Tuple t(static_cast<size_t>(p), 0);
        while (true) {
            if (row_canonical(L, t) == t) {
                const IdxMap& col = project_tuple(rows, D, t);
                if (!col.empty()) {
                    B->rref.insert(col);
                    if (B->rref.rank() == want) break;
                }
            }
            int s = p - 1;
            while (s >= 0 && t[static_cast<size_t>(s)] == D - 1) {
                t[static_cast<size_t>(s)] = 0;
                --s;
            }
            if (s < 0) break;
            ++t[static_cast<size_t>(s)];
        }
    }
    ensure(B->rref.rank() == want, "projector image rank disagrees with the dimension formula");
    std::lock_guard<std::mutex> lk(g_cache_mtx);
    auto [it, fresh] = g_index_cache.try_emplace(key, std::move(B));
    (void)fresh;
    return *it->second;
}

PolyTensor ComplexSpace::basis_element(long long i) const {
    require(i >= 0 && i < dim(), "basis index out of range");
    const long long nm = static_cast<long long>(monomials.size());
    const long long a = i / nm;
    const long long m = i % nm;
    PolyTensor T(D, p);
    const Expo& e = monomials[static_cast<size_t>(m)];
    for (const auto& [t, c] : index->rref.rows_[static_cast<size_t>(a)]) T.add_term(t, e, c);
    return T;
}

const ComplexSpace& enumerate_space(int N, int D, int p, int g) {
    check_common(N, D);
    require(p >= 0, "tensor degree must be nonnegative");
    require(g >= 0, "polynomial degree must be nonnegative");
    const std::tuple<int, int, int, int> key{N, D, p, g};
    {
        std::lock_guard<std::mutex> lk(g_cache_mtx);
        auto it = g_space_cache.find(key);
        if (it != g_space_cache.end()) return *it->second;
    }
    auto S = std::make_unique<ComplexSpace>();
    S->N = N;
    S->D = D;
    S->p = p;
    S->g = g;
    S->rows = diagram_for_degree(N, p).rows;
    S->index = &index_basis(S->rows, D);
    S->monomials = monomials_of_degree(D, g);
    std::lock_guard<std::mutex> lk(g_cache_mtx);
    auto [it, fresh] = g_space_cache.try_emplace(key, std::move(S));
    (void)fresh;
    return *it->second;
}

bool is_typed_member(int N, const PolyTensor& T) {
    require(N >= 2, "complex order must be at least 2");
    validate(T);
    const YoungDiagram dia = diagram_for_degree(N, T.degree);
    return is_member(build_projector(dia, T.D), T);
}

PolyTensor differential(int N, const PolyTensor& T) {
    require(is_typed_member(N, T), "input tensor does not have the symmetry type of its degree");
    return differential_unchecked(N, T);
}

PolyTensor d_power(int N, const PolyTensor& T, int k) {
    require(k >= 0, "power must be nonnegative");
    require(is_typed_member(N, T), "input tensor does not have the symmetry type of its degree");
    PolyTensor R = T;
    for (int i = 0; i < k; ++i) R = differential_unchecked(N, R);
    return R;
}

std::vector<Q> coords_in_space(const ComplexSpace& S, const PolyTensor& T) {
    validate(T);
    require(T.D == S.D && T.degree == S.p, "tensor shape does not match the space");
    std::map<Expo, long long> mono_at;
    for (size_t i = 0; i < S.monomials.size(); ++i)
        mono_at[S.monomials[i]] = static_cast<long long>(i);
    std::map<long long, IdxMap> by_mono;
    for (const auto& [k, c] : T.terms) {
        auto it = mono_at.find(k.exp);
        require(it != mono_at.end(), "tensor is not homogeneous of the space degree");
        by_mono[it->second][k.idx] = c;
    }
    const long long nm = static_cast<long long>(S.monomials.size());
    std::vector<Q> x(static_cast<size_t>(S.dim()), Q(0));
    for (const auto& [im, v] : by_mono) {
        auto co = S.index->rref.coords(v);
        require(co.has_value(), "tensor does not lie in the space");
        for (size_t a = 0; a < co->size(); ++a)
            x[static_cast<size_t>(static_cast<long long>(a) * nm + im)] = (*co)[a];
    }
    return x;
}

PolyTensor from_coords(const ComplexSpace& S, const std::vector<Q>& x) {
    require(static_cast<long long>(x.size()) == S.dim(), "coordinate vector has the wrong length");
    PolyTensor T(S.D, S.p);
    const long long nm = static_cast<long long>(S.monomials.size());
    const long long na = S.index_dim();
    for (long long a = 0; a < na; ++a) {
        const IdxMap& row = S.index->rref.rows_[static_cast<size_t>(a)];
        for (long long im = 0; im < nm; ++im) {
            const Q& c = x[static_cast<size_t>(a * nm + im)];
            if (c == 0) continue;
            const Expo& e = S.monomials[static_cast<size_t>(im)];
            for (const auto& [t, q] : row) T.add_term(t, e, c * q);
        }
    }
    return T;
}

const DifferentialMatrix& matrix_of_d_power(int N, int D, int p, int g, int k) {
    check_common(N, D);
    require(p >= 0, "tensor degree must be nonnegative");
    require(g >= 0, "polynomial degree must be nonnegative");
    require(k >= 1, "power must be at least 1");
    const std::tuple<int, int, int, int, int> key{N, D, p, g, k};
    {
        std::lock_guard<std::mutex> lk(g_cache_mtx);
        auto it = g_dmat_cache.find(key);
        if (it != g_dmat_cache.end()) return *it->second;
    }
    std::unique_ptr<DifferentialMatrix> M;
    if (g < k) {
        // monomial degree would drop below zero, so the target space is zero
        M = std::make_unique<DifferentialMatrix>();
        M->N = N;
        M->D = D;
        M->p = p;
        M->g = g;
        M->k = k;
        M->source_dim = enumerate_space(N, D, p, g).dim();
        M->target_dim = 0;
        M->matrix = MatQ::zero(0, static_cast<int>(M->source_dim));
    } else if (k == 1) {
        M = build_step(N, D, p, g);
    } else {
        const DifferentialMatrix& rest = matrix_of_d_power(N, D, p + 1, g - 1, k - 1);
        const DifferentialMatrix& first = matrix_of_d_power(N, D, p, g, 1);
        M = std::make_unique<DifferentialMatrix>();
        M->N = N;
        M->D = D;
        M->p = p;
        M->g = g;
        M->k = k;
        M->source_dim = first.source_dim;
        M->target_dim = rest.target_dim;
        M->matrix = mat_mul(rest.matrix, first.matrix);
    }
    std::lock_guard<std::mutex> lk(g_cache_mtx);
    auto [it, fresh] = g_dmat_cache.try_emplace(key, std::move(M));
    (void)fresh;
    return *it->second;
}

}  // namespace ncx
