#include "doctest.h"

#include "ncomplex/errors.hpp"
#include "ncomplex/linalg.hpp"

using namespace ncx;

namespace {

Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
    Q s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("incremental reduced echelon basis") {
    SparseRref B;
    Tuple t0{0}, t1{1}, t2{2};
    CHECK(B.insert(IdxMap{{t0, Q(1)}, {t1, Q(1)}}));
    CHECK(B.insert(IdxMap{{t1, Q(2)}}));
    CHECK(B.rank() == 2);
    CHECK(!B.insert(IdxMap{{t0, Q(3)}, {t1, Q(7)}}));
    // rows are fully reduced with unit pivots
    CHECK(B.rows_[0] == IdxMap{{t0, Q(1)}});
    CHECK(B.rows_[1] == IdxMap{{t1, Q(1)}});
    auto c = B.coords(IdxMap{{t0, Q(2)}, {t1, Q(3)}});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Q>{Q(2), Q(3)});
    CHECK(!B.coords(IdxMap{{t2, Q(1)}}).has_value());
}

TEST_CASE("dense product and rank") {
    MatQ A = MatQ::zero(2, 2), B = MatQ::zero(2, 2);
    A.a = {{Q(1), Q(2)}, {Q(3), Q(4)}};
    B.a = {{Q(0), Q(1)}, {Q(1), Q(0)}};
    MatQ C = mat_mul(A, B);
    CHECK(C.a == std::vector<std::vector<Q>>{{Q(2), Q(1)}, {Q(4), Q(3)}});
    CHECK(mat_vec(A, {Q(1), Q(1)}) == std::vector<Q>{Q(3), Q(7)});
    MatQ R = MatQ::zero(2, 2);
    R.a = {{Q(1), Q(2)}, {Q(2), Q(4)}};
    CHECK(rank_of(R) == 1);
    CHECK(rank_of(A) == 2);
    CHECK(is_zero(MatQ::zero(3, 2)));
}

TEST_CASE("solve finds exact solutions") {
    MatQ A = MatQ::zero(2, 2);
    A.a = {{Q(1), Q(2)}, {Q(3), Q(4)}};
    std::vector<Q> b{Q(5), Q(6)};
    SolveResult r = solve(A, b);
    REQUIRE(r.ok);
    CHECK(mat_vec(A, r.x) == b);
}

TEST_CASE("underdetermined systems pick a solution") {
    MatQ A = MatQ::zero(1, 2);
    A.a = {{Q(1), Q(1)}};
    SolveResult r = solve(A, {Q(5)});
    REQUIRE(r.ok);
    CHECK(r.x[0] + r.x[1] == Q(5));
}

TEST_CASE("solve failures carry verified certificates") {
    MatQ A = MatQ::zero(2, 1);
    A.a = {{Q(1)}, {Q(1)}};
    std::vector<Q> b{Q(1), Q(2)};
    SolveResult r = solve(A, b);
    REQUIRE(!r.ok);
    REQUIRE(r.left_null.size() == 2);
    // y^T A = 0 and y^T b != 0, checked by hand
    std::vector<Q> col{A.a[0][0], A.a[1][0]};
    CHECK(dot(r.left_null, col) == Q(0));
    CHECK(dot(r.left_null, b) != Q(0));
}

TEST_CASE("factor once solve many") {
    MatQ A = MatQ::zero(3, 2);
    A.a = {{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}};
    RrefFactor F = factor(A);
    CHECK(F.rank == 2);
    SolveResult r1 = F.apply({Q(1), Q(2), Q(3)});
    REQUIRE(r1.ok);
    CHECK(mat_vec(A, r1.x) == std::vector<Q>{Q(1), Q(2), Q(3)});
    SolveResult r2 = F.apply({Q(1), Q(2), Q(4)});
    REQUIRE(!r2.ok);
    std::vector<Q> c0{Q(1), Q(0), Q(1)}, c1{Q(0), Q(1), Q(1)};
    CHECK(dot(r2.left_null, c0) == Q(0));
    CHECK(dot(r2.left_null, c1) == Q(0));
    CHECK(dot(r2.left_null, {Q(1), Q(2), Q(4)}) != Q(0));
}

}  // TEST_SUITE
