#include "doctest.h"

#include "ncomplex/complex.hpp"
#include "ncomplex/errors.hpp"
#include "ncomplex/random_gen.hpp"
#include "ncomplex/spin.hpp"

using namespace ncx;

TEST_SUITE("spin") {

TEST_CASE("order one matches the exterior derivative") {
    for (int D : {2, 3}) {
        Rng rng(120 + D);
        PolyTensor h = random_symmetric(D, 1, 3, rng);
        SpinField f = make_spin_field(1, h);
        PolyTensor F = curvature(f);
        // hand-built field strength with weight-one antisymmetrization
        PolyTensor U = partial_derivative(h);
        PolyTensor expect = scale(sub(U, swap_slots(U, 0, 1)), Q(1, 2));
        CHECK(F == expect);
    }
    // a concrete potential: h = (y, 0) at D = 2 gives F_{01} = -1/2
    PolyTensor h(2, 1);
    h.add_term(Tuple{0}, Expo{0, 1}, Q(1));
    PolyTensor F = curvature(make_spin_field(1, h));
    PolyTensor expect(2, 2);
    expect.add_term(Tuple{0, 1}, Expo{0, 0}, Q(-1, 2));
    expect.add_term(Tuple{1, 0}, Expo{0, 0}, Q(1, 2));
    CHECK(F == expect);
}

TEST_CASE("curvature ignores gauge motions") {
    for (int S : {1, 2, 3}) {
        for (int D : {2, 3}) {
            Rng rng(10 * S + D);
            PolyTensor h = random_symmetric(D, S, 3, rng);
            PolyTensor eps = random_symmetric(D, S - 1, 3, rng);
            SpinField f = make_spin_field(S, h);
            CHECK(gauge_invariance_check(f, eps));
            SpinField g = gauge_transform(f, eps);
            CHECK(curvature(g) == curvature(f));
        }
    }
}

TEST_CASE("curvature satisfies the closure identity") {
    for (int S : {1, 2}) {
        for (int D : {2, 3}) {
            Rng rng(130 + 10 * S + D);
            PolyTensor h = random_symmetric(D, S, 3, rng);
            PolyTensor R = curvature(make_spin_field(S, h));
            CHECK(R.degree == 2 * S);
            CHECK(bianchi_check(R, S));
        }
    }
}

TEST_CASE("flat fields are pure gauge") {
    for (int S : {1, 2, 3}) {
        for (int D : {2, 3}) {
            Rng rng(140 + 10 * S + D);
            PolyTensor eps0 = random_symmetric(D, S - 1, 3, rng);
            PolyTensor h = differential(S + 1, eps0);
            SpinField f = make_spin_field(S, h);
            REQUIRE(curvature(f).is_zero());
            PolyTensor eps = pure_gauge_reconstruct(f);
            CHECK(differential(S + 1, eps) == h);
        }
    }
}

TEST_CASE("fields are recoverable from curvature") {
    for (int S : {1, 2}) {
        for (int D : {2, 3}) {
            Rng rng(150 + 10 * S + D);
            PolyTensor h = random_symmetric(D, S, 3, rng);
            PolyTensor R = curvature(make_spin_field(S, h));
            SpinField g = curvature_characterization(R, S);
            CHECK(curvature(g) == R);
            // recovered and original fields differ by pure gauge
            CHECK(d_power(S + 1, sub(g.h, h), S).is_zero());
        }
    }
}

TEST_CASE("rejects mismatched inputs") {
    Rng rng(6);
    PolyTensor h2 = random_symmetric(2, 2, 2, rng);
    CHECK_THROWS_AS(make_spin_field(1, h2), precondition_error);
    SpinField f = make_spin_field(2, h2);
    PolyTensor eps_bad = random_symmetric(2, 2, 2, rng);
    CHECK_THROWS_AS(gauge_transform(f, eps_bad), precondition_error);
    // characterization rejects tensors outside the symmetry type
    PolyTensor notR(2, 4);
    notR.add_term(Tuple{0, 0, 0, 0}, Expo{0, 0}, Q(1));
    CHECK_THROWS_AS(curvature_characterization(notR, 2), precondition_error);
    // and typed tensors that break the closure identity
    PolyTensor W = random_typed(3, 3, 4, 2, rng);
    REQUIRE(!differential(3, W).is_zero());
    CHECK_THROWS_AS(curvature_characterization(W, 2), precondition_error);
    // flat reconstruction needs zero curvature
    PolyTensor curved = random_symmetric(2, 2, 3, rng);
    REQUIRE(!curvature(make_spin_field(2, curved)).is_zero());
    CHECK_THROWS_AS(pure_gauge_reconstruct(make_spin_field(2, curved)), precondition_error);
}

}  // TEST_SUITE
