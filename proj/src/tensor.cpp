#include "ncomplex/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace ncx {

PolyTensor::PolyTensor(int D_, int degree_) : D(D_), degree(degree_) {
    require(D >= 1, "tensor dimension must be positive");
    require(D <= 255, "tensor dimension too large (max 255)");
    require(degree >= 0, "tensor degree must be non-negative");
}

void PolyTensor::add_term(const Tuple& idx, const Expo& exp, const Q& c) {
    if (c == 0) return;
    TermKey k{idx, exp};
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void validate(const PolyTensor& T) {
    require(T.D >= 1 && T.D <= 255, "tensor dimension out of range");
    require(T.degree >= 0, "tensor degree must be non-negative");
    for (const auto& [k, c] : T.terms) {
        require(static_cast<int>(k.idx.size()) == T.degree, "index tuple length mismatch");
        require(static_cast<int>(k.exp.size()) == T.D, "exponent vector length mismatch");
        for (auto v : k.idx) require(v < T.D, "index entry out of range");
        require(c != 0, "stored zero coefficient");
    }
}

static void check_same_shape(const PolyTensor& A, const PolyTensor& B) {
    require(A.D == B.D && A.degree == B.degree, "tensor shape mismatch");
}

PolyTensor add(const PolyTensor& A, const PolyTensor& B) {
    check_same_shape(A, B);
    PolyTensor R = A;
    for (const auto& [k, c] : B.terms) R.add_term(k.idx, k.exp, c);
    return R;
}

PolyTensor sub(const PolyTensor& A, const PolyTensor& B) {
    check_same_shape(A, B);
    PolyTensor R = A;
    for (const auto& [k, c] : B.terms) R.add_term(k.idx, k.exp, -c);
    return R;
}

PolyTensor scale(const PolyTensor& A, const Q& c) {
    PolyTensor R(A.D, A.degree);
    if (c == 0) return R;
    for (const auto& [k, v] : A.terms) R.terms.emplace(k, v * c);
    return R;
}

PolyTensor partial_derivative(const PolyTensor& T) {
    PolyTensor R(T.D, T.degree + 1);
    for (const auto& [k, c] : T.terms) {
        for (int mu = 0; mu < T.D; ++mu) {
            if (k.exp[mu] == 0) continue;
            Tuple idx;
            idx.reserve(k.idx.size() + 1);
            idx.push_back(static_cast<uint8_t>(mu));
            idx.insert(idx.end(), k.idx.begin(), k.idx.end());
            Expo e = k.exp;
            e[mu] -= 1;
            R.add_term(idx, e, c * k.exp[mu]);
        }
    }
    return R;
}

PolyTensor tensor_product(const PolyTensor& A, const PolyTensor& B) {
    require(A.D == B.D, "tensor dimension mismatch");
    PolyTensor R(A.D, A.degree + B.degree);
    for (const auto& [ka, ca] : A.terms) {
        for (const auto& [kb, cb] : B.terms) {
            Tuple idx = ka.idx;
            idx.insert(idx.end(), kb.idx.begin(), kb.idx.end());
            Expo e = ka.exp;
            for (int i = 0; i < A.D; ++i) e[i] = static_cast<uint16_t>(e[i] + kb.exp[i]);
            R.add_term(idx, e, ca * cb);
        }
    }
    return R;
}

PolyTensor contract_with_x(const PolyTensor& T, int slot) {
    require(slot >= 0 && slot < T.degree, "slot out of range");
    PolyTensor R(T.D, T.degree - 1);
    for (const auto& [k, c] : T.terms) {
        int v = k.idx[slot];
        Tuple idx = k.idx;
        idx.erase(idx.begin() + slot);
        Expo e = k.exp;
        e[v] += 1;
        R.add_term(idx, e, c);
    }
    return R;
}

PolyTensor trace_contract(const PolyTensor& T, int s1, int s2) {
    require(s1 >= 0 && s1 < T.degree && s2 >= 0 && s2 < T.degree && s1 != s2,
            "invalid trace slots");
    if (s1 > s2) std::swap(s1, s2);
    PolyTensor R(T.D, T.degree - 2);
    for (const auto& [k, c] : T.terms) {
        if (k.idx[s1] != k.idx[s2]) continue;
        Tuple idx = k.idx;
        idx.erase(idx.begin() + s2);
        idx.erase(idx.begin() + s1);
        R.add_term(idx, k.exp, c);
    }
    return R;
}

PolyTensor swap_slots(const PolyTensor& T, int a, int b) {
    require(a >= 0 && a < T.degree && b >= 0 && b < T.degree, "slot out of range");
    PolyTensor R(T.D, T.degree);
    for (const auto& [k, c] : T.terms) {
        Tuple idx = k.idx;
        std::swap(idx[a], idx[b]);
        R.add_term(idx, k.exp, c);
    }
    return R;
}

PolyTensor reorder_slots(const PolyTensor& T, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == T.degree, "permutation length mismatch");
    PolyTensor R(T.D, T.degree);
    for (const auto& [k, c] : T.terms) {
        Tuple idx(k.idx.size());
        for (size_t i = 0; i < perm.size(); ++i) idx[perm[i]] = k.idx[i];
        R.add_term(idx, k.exp, c);
    }
    return R;
}

static int perm_sign(const std::vector<int>& p) {
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

PolyTensor symmetrize_slots(const PolyTensor& T, const std::vector<int>& slots,
                            bool signed_group) {
    for (int s : slots) require(s >= 0 && s < T.degree, "slot out of range");
    int n = static_cast<int>(slots.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Q w(1, static_cast<long>(fact));
    PolyTensor R(T.D, T.degree);
    do {
        Q coeff = w;
        if (signed_group && perm_sign(perm) < 0) coeff = -coeff;
        for (const auto& [k, c] : T.terms) {
            Tuple idx = k.idx;
            for (int i = 0; i < n; ++i) idx[slots[i]] = k.idx[slots[perm[i]]];
            R.add_term(idx, k.exp, c * coeff);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return R;
}

std::map<int, PolyTensor> homogeneous_parts(const PolyTensor& T) {
    std::map<int, PolyTensor> parts;
    for (const auto& [k, c] : T.terms) {
        int g = 0;
        for (auto e : k.exp) g += e;
        auto it = parts.find(g);
        if (it == parts.end()) it = parts.emplace(g, PolyTensor(T.D, T.degree)).first;
        it->second.terms.emplace(k, c);
    }
    return parts;
}

PolyTensor radial_rescale_integral(const PolyTensor& T, int depth, int extra_t_power) {
    require(depth >= 1, "integral depth must be positive");
    require(extra_t_power >= 0, "extra power must be non-negative");
    PolyTensor R(T.D, T.degree);
    for (const auto& [k, c] : T.terms) {
        long long m = 0;
        for (auto e : k.exp) m += e;
        Q w(1);
        for (int i = 1; i <= depth; ++i) w /= Q(static_cast<long>(m + extra_t_power + i));
        R.terms.emplace(k, c * w);
    }
    return R;
}

LeviCivita::LeviCivita(int D_) : D(D_) {
    require(D >= 1 && D <= 255, "epsilon dimension out of range");
}

int LeviCivita::sign(const Tuple& vals) const {
    require(static_cast<int>(vals.size()) == D, "epsilon arity mismatch");
    std::vector<int> p(vals.begin(), vals.end());
    std::vector<bool> seen(D, false);
    for (int v : p) {
        if (v < 0 || v >= D || seen[v]) return 0;
        seen[v] = true;
    }
    return perm_sign(p);
}

PolyTensor epsilon_contract(const PolyTensor& T, const std::vector<int>& slots) {
    int k = static_cast<int>(slots.size());
    require(k <= T.D, "contracted slot count exceeds dimension");
    std::vector<bool> used(T.degree, false);
    for (int s : slots) {
        require(s >= 0 && s < T.degree, "slot out of range");
        require(!used[s], "duplicate contraction slot");
        used[s] = true;
    }
    LeviCivita eps(T.D);
    int free_eps = T.D - k;
    PolyTensor R(T.D, T.degree - k + free_eps);

    std::vector<int> keep;
    for (int s = 0; s < T.degree; ++s)
        if (!used[s]) keep.push_back(s);

    // enumerate assignments of epsilon's free slots
    std::vector<uint8_t> comp(free_eps, 0);
    for (const auto& [key, c] : T.terms) {
        Tuple evals(T.D);
        for (int i = 0; i < k; ++i) evals[i] = key.idx[slots[i]];
        std::fill(comp.begin(), comp.end(), 0);
        while (true) {
            for (int i = 0; i < free_eps; ++i) evals[k + i] = comp[i];
            int s = eps.sign(evals);
            if (s != 0) {
                Tuple idx;
                idx.reserve(keep.size() + comp.size());
                for (int ks : keep) idx.push_back(key.idx[ks]);
                idx.insert(idx.end(), comp.begin(), comp.end());
                R.add_term(idx, key.exp, s > 0 ? c : -c);
            }
            int pos = free_eps - 1;
            while (pos >= 0 && comp[pos] == T.D - 1) comp[pos--] = 0;
            if (pos < 0) break;
            ++comp[pos];
        }
    }
    return R;
}

std::vector<Expo> monomials_of_degree(int D, int g) {
    require(D >= 1, "dimension must be positive");
    require(g >= 0, "degree must be non-negative");
    std::vector<Expo> out;
    Expo cur(D, 0);
    // lexicographic ascending via direct recursion on remaining degree
    struct Rec {
        int D;
        std::vector<Expo>& out;
        Expo& cur;
        void go(int pos, int rem) {
            if (pos == D - 1) {
                cur[pos] = static_cast<uint16_t>(rem);
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[pos] = static_cast<uint16_t>(v);
                go(pos + 1, rem - v);
            }
        }
    } rec{D, out, cur};
    rec.go(0, g);
    return out;
}

long long binomial_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= static_cast<long>(n - k + i);
        r /= static_cast<long>(i);
    }
    ensure(r.fits_slong_p(), "binomial overflow");
    return r.get_si();
}

}  // namespace ncx
