#include "ncomplex/young.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "ncomplex/errors.hpp"

namespace ncx {

YoungDiagram::YoungDiagram(Rows r) : rows(std::move(r)) {
    for (size_t i = 0; i < rows.size(); ++i) {
        require(rows[i] >= 1, "diagram row lengths must be positive");
        if (i > 0) require(rows[i] <= rows[i - 1], "diagram rows must be weakly decreasing");
    }
}

int YoungDiagram::cells() const {
    int p = 0;
    for (int r : rows) p += r;
    return p;
}

YoungDiagram diagram_for_degree(int N, int p) {
    require(N >= 2, "complex order must be at least 2");
    require(p >= 0, "tensor degree must be non-negative");
    int n = p / (N - 1), r = p % (N - 1);
    Rows rows(n, N - 1);
    if (r != 0) rows.push_back(r);
    return YoungDiagram(std::move(rows));
}

bool is_well_filled(int N, int p) {
    require(N >= 2, "complex order must be at least 2");
    return p % (N - 1) == 0;
}

Rows conjugate(const Rows& rows) {
    if (rows.empty()) return {};
    Rows cols(rows[0], 0);
    for (int j = 0; j < rows[0]; ++j)
        for (int r : rows)
            if (r > j) ++cols[j];
    return cols;
}

long long hook_dimension(const YoungDiagram& diagram, int D) {
    require(D >= 1, "dimension must be positive");
    const Rows& rows = diagram.rows;
    if (rows.empty()) return 1;
    if (static_cast<int>(rows.size()) > D) return 0;
    Rows cols = conjugate(rows);
    mpz_class num(1), den(1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            num *= D + j - static_cast<int>(i);
            den *= rows[i] - j + cols[j] - static_cast<int>(i) - 1;
        }
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    ensure(r == 0, "hook content product not divisible by hook lengths");
    ensure(q.fits_slong_p(), "hook dimension overflow");
    return q.get_si();
}

Layout make_layout(const Rows& rows) {
    Layout L;
    L.rows = rows;
    Rows cols = conjugate(rows);
    L.col_groups.resize(cols.size());
    L.row_groups.resize(rows.size());
    int slot = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        for (int i = 0; i < cols[j]; ++i) {
            L.col_groups[j].push_back(slot);
            L.row_groups[i].push_back(slot);
            ++slot;
        }
    }
    L.p = slot;
    return L;
}

Tuple row_canonical(const Layout& L, const Tuple& t) {
    Tuple out = t;
    std::vector<uint8_t> vals;
    for (const auto& g : L.row_groups) {
        vals.clear();
        for (int s : g) vals.push_back(t[s]);
        std::sort(vals.begin(), vals.end());
        for (size_t i = 0; i < g.size(); ++i) out[g[i]] = vals[i];
    }
    return out;
}

namespace {

struct PermSet {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
};

int sign_of(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

const PermSet& perm_set(int n) {
    // deque keeps references stable while the cache grows
    static std::deque<PermSet> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        PermSet ps;
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            ps.perms.push_back(perm);
            ps.signs.push_back(sign_of(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        cache.push_back(std::move(ps));
    }
    return cache[n];
}

long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void accumulate(IdxMap& out, const Tuple& t, const Q& add) {
    auto it = out.find(t);
    if (it == out.end()) {
        out.emplace(t, add);
    } else {
        it->second += add;
        if (it->second == 0) out.erase(it);
    }
}

// weight-one average over all products of per-group slot permutations applied
// to a single tuple; the signed version weights each permutation by its sign
void expand(const Tuple& t, const std::vector<std::vector<int>>& groups, bool signed_group,
            const Q& scale, IdxMap& out) {
    long long total = 1;
    std::vector<const PermSet*> psets;
    psets.reserve(groups.size());
    for (const auto& g : groups) {
        total *= factorial_ll(static_cast<int>(g.size()));
        psets.push_back(&perm_set(static_cast<int>(g.size())));
    }
    Q w = scale / Q(static_cast<long>(total));

    std::vector<size_t> odo(groups.size(), 0);
    Tuple cur(t.size());
    while (true) {
        cur = t;
        int sgn = 1;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& g = groups[gi];
            const auto& perm = psets[gi]->perms[odo[gi]];
            for (size_t i = 0; i < g.size(); ++i) cur[g[i]] = t[g[perm[i]]];
            if (signed_group) sgn *= psets[gi]->signs[odo[gi]];
        }
        accumulate(out, cur, sgn > 0 ? w : -w);
        size_t gi = 0;
        while (gi < groups.size() && ++odo[gi] == psets[gi]->perms.size()) odo[gi++] = 0;
        if (gi == groups.size()) break;
    }
}

bool columns_distinct(const Tuple& t, const std::vector<std::vector<int>>& col_groups) {
    for (const auto& g : col_groups) {
        for (size_t a = 0; a < g.size(); ++a)
            for (size_t b = a + 1; b < g.size(); ++b)
                if (t[g[a]] == t[g[b]]) return false;
    }
    return true;
}

IdxMap project_tuple_uncached(const Layout& L, const Tuple& t) {
    // P e_t = c * A(S e_t); S-images with a repeated value inside some column
    // are killed by A and are skipped before the signed expansion
    IdxMap sym;
    expand(t, L.row_groups, false, Q(1), sym);
    IdxMap out;
    for (const auto& [st, w] : sym) {
        if (!columns_distinct(st, L.col_groups)) continue;
        expand(st, L.col_groups, true, w, out);
    }
    if (!out.empty()) {
        Q c = idempotence_constant(L.rows);
        for (auto& [k, v] : out) v *= c;
    }
    return out;
}

struct ColKey {
    Rows rows;
    Tuple rep;
    friend bool operator<(const ColKey& a, const ColKey& b) {
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.rep < b.rep;
    }
};

std::map<Rows, Layout> g_layouts;
std::mutex g_layout_mtx;

const Layout& cached_layout(const Rows& rows) {
    std::lock_guard<std::mutex> lock(g_layout_mtx);
    auto it = g_layouts.find(rows);
    if (it == g_layouts.end()) it = g_layouts.emplace(rows, make_layout(rows)).first;
    return it->second;
}

}  // namespace

Q idempotence_constant(const Rows& rows) {
    static std::map<Rows, Q> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(rows);
        if (it != cache.end()) return it->second;
    }
    const Layout L = make_layout(rows);
    if (L.p == 0) {
        std::lock_guard<std::mutex> lock(mtx);
        return cache.emplace(rows, Q(1)).first->second;
    }

    // group algebra of S_p: e = sum over column perms g and row perms r of
    // sgn(g)/(prod c! prod r!) * (g o r). Quasi-idempotence e*e = kappa*e
    // gives kappa = (e*e)(id)/e(id), independent of the ambient dimension.
    long long wr = 1, wc = 1;
    for (const auto& g : L.row_groups) wr *= factorial_ll(static_cast<int>(g.size()));
    for (const auto& g : L.col_groups) wc *= factorial_ll(static_cast<int>(g.size()));
    Q w0 = Q(1) / Q(static_cast<long>(wr * wc));

    auto enumerate_group = [&](const std::vector<std::vector<int>>& groups) {
        // all slot permutations generated by per-group permutations, with signs
        std::vector<std::pair<std::vector<uint8_t>, int>> result;
        std::vector<const PermSet*> psets;
        for (const auto& g : groups) psets.push_back(&perm_set(static_cast<int>(g.size())));
        std::vector<size_t> odo(groups.size(), 0);
        while (true) {
            std::vector<uint8_t> perm(L.p);
            std::iota(perm.begin(), perm.end(), static_cast<uint8_t>(0));
            int sgn = 1;
            for (size_t gi = 0; gi < groups.size(); ++gi) {
                const auto& g = groups[gi];
                const auto& pm = psets[gi]->perms[odo[gi]];
                for (size_t i = 0; i < g.size(); ++i)
                    perm[g[i]] = static_cast<uint8_t>(g[pm[i]]);
                sgn *= psets[gi]->signs[odo[gi]];
            }
            result.emplace_back(std::move(perm), sgn);
            size_t gi = 0;
            while (gi < groups.size() && ++odo[gi] == psets[gi]->perms.size()) odo[gi++] = 0;
            if (gi == groups.size()) break;
        }
        return result;
    };

    auto rowp = enumerate_group(L.row_groups);
    auto colp = enumerate_group(L.col_groups);
    std::map<std::vector<uint8_t>, Q> elem;
    std::vector<uint8_t> comp(L.p);
    for (const auto& [gam, sg] : colp) {
        for (const auto& [rho, sr] : rowp) {
            (void)sr;
            for (int a = 0; a < L.p; ++a) comp[a] = gam[rho[a]];
            Q add = (sg > 0) ? w0 : -w0;
            auto it = elem.find(comp);
            if (it == elem.end()) {
                elem.emplace(comp, add);
            } else {
                it->second += add;
                if (it->second == 0) elem.erase(it);
            }
        }
    }

    std::vector<uint8_t> ident(L.p);
    std::iota(ident.begin(), ident.end(), static_cast<uint8_t>(0));
    auto idit = elem.find(ident);
    ensure(idit != elem.end() && idit->second == w0,
           "symmetrizer identity coefficient mismatch");

    Q conv_id(0);
    std::vector<uint8_t> inv(L.p);
    for (const auto& [perm, coeff] : elem) {
        for (int a = 0; a < L.p; ++a) inv[perm[a]] = static_cast<uint8_t>(a);
        auto it = elem.find(inv);
        if (it != elem.end()) conv_id += coeff * it->second;
    }
    Q kappa = conv_id / w0;
    ensure(kappa != 0, "symmetrizer is nilpotent; cannot normalize");
    Q c = Q(1) / kappa;

    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(rows, c).first->second;
}

const IdxMap& project_tuple(const Rows& rows, int D, const Tuple& t) {
    static std::map<ColKey, IdxMap> cache;
    static std::mutex mtx;
    const Layout& L = cached_layout(rows);
    require(static_cast<int>(t.size()) == L.p, "tuple length does not match diagram");
    for (auto v : t) require(v < D, "tuple entry out of range");
    ColKey key{rows, row_canonical(L, t)};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    IdxMap col = project_tuple_uncached(L, key.rep);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::move(key), std::move(col)).first->second;
}

YoungProjector build_projector(const YoungDiagram& diagram, int D) {
    require(D >= 1, "dimension must be positive");
    require(D <= 255, "dimension too large (max 255)");
    return YoungProjector{diagram, D};
}

PolyTensor apply_projector(const YoungProjector& P, const PolyTensor& T) {
    require(T.D == P.D, "tensor dimension does not match projector");
    require(T.degree == P.diagram.cells(), "tensor degree does not match diagram cells");
    PolyTensor R(T.D, T.degree);
    for (const auto& [k, c] : T.terms) {
        const IdxMap& col = project_tuple(P.diagram.rows, P.D, k.idx);
        for (const auto& [idx2, q] : col) R.add_term(idx2, k.exp, q * c);
    }
    return R;
}

bool is_member(const YoungProjector& P, const PolyTensor& T) {
    return apply_projector(P, T) == T;
}

}  // namespace ncx
