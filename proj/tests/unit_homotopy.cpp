#include "doctest.h"

#include "ncomplex/cohomology.hpp"
#include "ncomplex/complex.hpp"
#include "ncomplex/errors.hpp"
#include "ncomplex/homotopy.hpp"
#include "ncomplex/random_gen.hpp"

using namespace ncx;

TEST_SUITE("homotopy") {

TEST_CASE("threefold primitive reconstruction") {
    for (int D : {2, 3}) {
        Rng rng(40 + D);
        for (int s = 0; s < 3; ++s) {
            PolyTensor T = random_closed_symmetric3(D, 3, rng);
            REQUIRE(d_power(4, T, 3).is_zero());
            PolyTensor xi = homotopy_symmetric3(T);
            CHECK(differential(4, xi) == T);
            CHECK(is_typed_member(4, xi));
            CHECK(xi == reorder_slots(xi, {1, 0}));
        }
    }
}

TEST_CASE("threefold primitive agrees with the solver up to exactness") {
    for (int D : {2, 3}) {
        Rng rng(50 + D);
        PolyTensor T = random_closed_symmetric3(D, 3, rng);
        CHECK(crosscheck_symmetric3(T));
    }
}

TEST_CASE("curvature double primitive") {
    for (int D : {2, 3}) {
        Rng rng(60 + D);
        for (int s = 0; s < 3; ++s) {
            RiemannSeed seed = random_closed_riemann(D, 3, rng);
            REQUIRE(differential(3, seed.R).is_zero());
            PolyTensor h = homotopy_riemann(seed.R);
            CHECK(riemann_from_potential(h) == seed.R);
            CHECK(h == reorder_slots(h, {1, 0}));
            // reconstructed and generating potentials differ by pure gauge
            CHECK(d_power(3, sub(h, seed.h0), 2).is_zero());
        }
    }
}

TEST_CASE("curvature double primitive agrees with the solver") {
    for (int D : {2, 3}) {
        Rng rng(70 + D);
        RiemannSeed seed = random_closed_riemann(D, 3, rng);
        CHECK(crosscheck_riemann(seed.R));
    }
}

TEST_CASE("curvature from potential conventions") {
    for (int D : {2, 3}) {
        Rng rng(80 + D);
        PolyTensor h = random_symmetric(D, 2, 3, rng);
        PolyTensor R = riemann_from_potential(h);
        // frozen: the double-derivative build equals -6 d^2 h
        CHECK(R == scale(d_power(3, h, 2), Q(-6)));
        CHECK(is_typed_member(3, R));
        CHECK(differential(3, R).is_zero());
    }
}

TEST_CASE("rejects wrong inputs") {
    Rng rng(19);
    // not closed
    PolyTensor T = random_typed(4, 3, 3, 3, rng);
    REQUIRE(!d_power(4, T, 3).is_zero());
    CHECK_THROWS_AS(homotopy_symmetric3(T), precondition_error);
    // wrong rank
    PolyTensor v = random_typed(4, 3, 1, 2, rng);
    CHECK_THROWS_AS(homotopy_symmetric3(v), precondition_error);
    // not a symmetry-type member
    PolyTensor raw(3, 4);
    raw.add_term(Tuple{0, 1, 2, 0}, Expo{1, 0, 0}, Q(1));
    CHECK_THROWS_AS(homotopy_riemann(raw), precondition_error);
    // right type, not closed
    PolyTensor W = random_typed(3, 3, 4, 2, rng);
    REQUIRE(!differential(3, W).is_zero());
    CHECK_THROWS_AS(homotopy_riemann(W), precondition_error);
}

TEST_CASE("zero maps to zero") {
    CHECK(homotopy_symmetric3(PolyTensor(2, 3)).is_zero());
    CHECK(homotopy_riemann(PolyTensor(2, 4)).is_zero());
}

}  // TEST_SUITE
