#pragma once
/* Sparse exact-rational polynomial tensor fields on R^D.
   A PolyTensor stores a finite map (index tuple, monomial exponents) -> Q.
   Canonical term order: lexicographic on the index tuple, then on the
   exponent vector; std::map keeps it sorted, so serialization and iteration
   are deterministic. */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncomplex/errors.hpp"
#include "ncomplex/rational.hpp"

namespace ncx {

using Tuple = std::vector<uint8_t>;   // index entries, each < D (D <= 255)
using Expo = std::vector<uint16_t>;   // exponent vector, length D

struct TermKey {
    Tuple idx;
    Expo exp;
    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.idx != b.idx) return a.idx < b.idx;
        return a.exp < b.exp;
    }
    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.idx == b.idx && a.exp == b.exp;
    }
};

struct PolyTensor {
    int D = 1;
    int degree = 0;  // number of index slots
    std::map<TermKey, Q> terms;

    PolyTensor() = default;
    PolyTensor(int D_, int degree_);

    // accumulates; erases the entry when the total hits zero
    void add_term(const Tuple& idx, const Expo& exp, const Q& c);

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const PolyTensor& a, const PolyTensor& b) {
        return a.D == b.D && a.degree == b.degree && a.terms == b.terms;
    }
};

// throws precondition_error unless all tuples/exponent vectors are well formed
void validate(const PolyTensor& T);

PolyTensor add(const PolyTensor& A, const PolyTensor& B);
PolyTensor sub(const PolyTensor& A, const PolyTensor& B);
PolyTensor scale(const PolyTensor& A, const Q& c);

// d/dx with the new index at slot 0: (dT)_{mu nu...} = d_mu T_{nu...}
PolyTensor partial_derivative(const PolyTensor& T);

// slot-wise tensor product: A's slots first, monomials multiplied
PolyTensor tensor_product(const PolyTensor& A, const PolyTensor& B);

// removes `slot` and multiplies each term by the coordinate x_i it carried
PolyTensor contract_with_x(const PolyTensor& T, int slot);

// flat-metric trace over two slots (sums terms whose values there agree)
PolyTensor trace_contract(const PolyTensor& T, int s1, int s2);

PolyTensor swap_slots(const PolyTensor& T, int a, int b);

// perm maps old slot position -> new slot position
PolyTensor reorder_slots(const PolyTensor& T, const std::vector<int>& perm);

// weight-one average over all permutations of the listed slots;
// signed_group = true weights each permutation by its sign
PolyTensor symmetrize_slots(const PolyTensor& T, const std::vector<int>& slots, bool signed_group);

// splits by homogeneous polynomial degree
std::map<int, PolyTensor> homogeneous_parts(const PolyTensor& T);

// Nested radial integral weights: each homogeneous component of polynomial
// degree m is multiplied by prod_{i=1..depth} 1/(m + extra_t_power + i).
// depth 1 -> 1/(m+1); depth 2 -> 1/((m+1)(m+2)); extra_t_power inserts an
// extra power of the innermost line parameter.
PolyTensor radial_rescale_integral(const PolyTensor& T, int depth, int extra_t_power = 0);

struct LeviCivita {
    int D;
    explicit LeviCivita(int D_);
    // sign of the permutation (vals as a rearrangement of 0..D-1); 0 on repeats
    int sign(const Tuple& vals) const;
};

// Contracts the listed slots of T (in the given order) against the first
// slots of the rank-D epsilon symbol with eps(0,1,...,D-1) = +1. Result slots:
// T's remaining slots in their original order, then epsilon's free slots.
// An empty slot list tensors T with the full epsilon symbol.
PolyTensor epsilon_contract(const PolyTensor& T, const std::vector<int>& slots);

// all exponent vectors of total degree g, lexicographically ascending
std::vector<Expo> monomials_of_degree(int D, int g);

long long binomial_ll(long long n, long long k);

}  // namespace ncx
