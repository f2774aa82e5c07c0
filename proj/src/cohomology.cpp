#include "ncomplex/cohomology.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>

#include "ncomplex/errors.hpp"
#include "ncomplex/linalg.hpp"
#include "ncomplex/parallel.hpp"

namespace ncx {
namespace {

std::mutex g_mtx;
std::map<std::tuple<int, int, int, int, int>, long long> g_rank_cache;
std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<RrefFactor>> g_factor_cache;

long long rank_of_d_power(int N, int D, int p, int g, int k) {
    const std::tuple<int, int, int, int, int> key{N, D, p, g, k};
    {
        std::lock_guard<std::mutex> lk(g_mtx);
        auto it = g_rank_cache.find(key);
        if (it != g_rank_cache.end()) return it->second;
    }
    const long long r = rank_of(matrix_of_d_power(N, D, p, g, k).matrix);
    std::lock_guard<std::mutex> lk(g_mtx);
    g_rank_cache.emplace(key, r);
    return r;
}

const RrefFactor& factor_of_d_power(int N, int D, int p, int g, int k) {
    const std::tuple<int, int, int, int, int> key{N, D, p, g, k};
    {
        std::lock_guard<std::mutex> lk(g_mtx);
        auto it = g_factor_cache.find(key);
        if (it != g_factor_cache.end()) return *it->second;
    }
    auto F = std::make_unique<RrefFactor>(factor(matrix_of_d_power(N, D, p, g, k).matrix));
    std::lock_guard<std::mutex> lk(g_mtx);
    auto [it, fresh] = g_factor_cache.try_emplace(key, std::move(F));
    (void)fresh;
    return *it->second;
}

void check_order_k(int N, int k) {
    require(N >= 2, "complex order must be at least 2");
    require(k >= 1 && k <= N - 1, "k must satisfy 1 <= k <= N-1");
}

}  // namespace

CohomologyReport cohomology_dim(int N, int D, int p, int k, int g) {
    check_order_k(N, k);
    CohomologyReport rep;
    rep.N = N;
    rep.D = D;
    rep.p = p;
    rep.k = k;
    rep.g = g;
    const DifferentialMatrix& Mk = matrix_of_d_power(N, D, p, g, k);
    rep.dim_kernel = Mk.source_dim - rank_of_d_power(N, D, p, g, k);
    rep.rank_image =
        (p + k - N < 0) ? 0 : rank_of_d_power(N, D, p + k - N, g + N - k, N - k);
    ensure(rep.rank_image <= rep.dim_kernel, "image escapes the kernel");
    rep.dim_H = rep.dim_kernel - rep.rank_image;
    // full rectangles at positive degree carry no cohomology
    if (p >= 1 && is_well_filled(N, p))
        ensure(rep.dim_H == 0, "nonzero cohomology at a full rectangular degree");
    return rep;
}

PreimageResult preimage_solve(int N, const PolyTensor& R, int k) {
    check_order_k(N, k);
    validate(R);
    require(is_typed_member(N, R), "input tensor does not have the symmetry type of its degree");
    require(d_power(N, R, k).is_zero(), "input tensor is not closed under the requested power of d");
    const int m = N - k;
    const int ps = R.degree - m;
    PreimageResult res;
    if (ps < 0) {
        if (R.is_zero()) {
            res.ok = true;
            res.K = PolyTensor(R.D, 0);
            return res;
        }
        // the image is empty below degree zero; any nonzero coordinate of R
        // is a certificate (the image matrix has no columns)
        auto parts = homogeneous_parts(R);
        const auto& [g, part] = *parts.begin();
        const std::vector<Q> b = coords_in_space(enumerate_space(N, R.D, R.degree, g), part);
        res.ok = false;
        res.why.p = R.degree;
        res.why.g = g;
        res.why.functional.assign(b.size(), Q(0));
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] != 0) {
                res.why.functional[i] = 1;
                break;
            }
        }
        return res;
    }
    PolyTensor K(R.D, ps);
    for (const auto& [g, part] : homogeneous_parts(R)) {
        const ComplexSpace& tgt = enumerate_space(N, R.D, R.degree, g);
        const ComplexSpace& src = enumerate_space(N, R.D, ps, g + m);
        const RrefFactor& F = factor_of_d_power(N, R.D, ps, g + m, m);
        SolveResult sol = F.apply(coords_in_space(tgt, part));
        if (!sol.ok) {
            res.ok = false;
            res.why.p = R.degree;
            res.why.g = g;
            res.why.functional = std::move(sol.left_null);
            return res;
        }
        K = add(K, from_coords(src, sol.x));
    }
    ensure(d_power(N, K, m) == R, "reconstructed preimage failed verification");
    res.ok = true;
    res.K = std::move(K);
    return res;
}

std::vector<CohomologyReport> scan_cohomology(int N, int D, int p_max, int g_max) {
    require(N >= 2, "complex order must be at least 2");
    require(D >= 1 && D <= 255, "dimension must be between 1 and 255");
    require(p_max >= 0 && g_max >= 0, "bounds must be nonnegative");
    require(p_max <= (N - 1) * D, "p_max exceeds the top nonempty degree");
    const int nk = N - 1;
    const long long cells = static_cast<long long>(p_max + 1) * nk * (g_max + 1);
    std::vector<CohomologyReport> out(static_cast<size_t>(cells));
    parallel_for(cells, [&](long long i) {
        const int g = static_cast<int>(i % (g_max + 1));
        const int k = static_cast<int>((i / (g_max + 1)) % nk) + 1;
        const int p = static_cast<int>(i / (static_cast<long long>(g_max + 1) * nk));
        out[static_cast<size_t>(i)] = cohomology_dim(N, D, p, k, g);
    });
    return out;
}

}  // namespace ncx
