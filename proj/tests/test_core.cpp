#include "tconfig/matrix.hpp"

#include "doctest.h"

using namespace tconfig;

TEST_CASE("rank basics") {
    MatQ id = MatQ::Identity(2, 2);
    CHECK(rank(id) == 2);

    // a ⊗ b for a=(1,1), b=(1,2)
    VecQ a(2), b(2);
    a << 1, 1;
    b << 1, 2;
    MatQ ab = a * b.transpose();
    CHECK(rank(ab) == 1);

    MatQ empty;
    CHECK_THROWS_AS(rank(empty), std::invalid_argument);

    CHECK_THROWS_AS(rank(id, Rat(1, 100)), std::invalid_argument);  // exact mode wants tol 0

    MatD idd = MatD::Identity(3, 3);
    CHECK(rank(idd) == 3);
    MatD low(3, 3);
    low << 1, 2, 3, 2, 4, 6, 1, 1, 1;
    CHECK(rank(low) == 2);
}

TEST_CASE("nullspace basics and rank-nullity") {
    MatQ zero = MatQ::Zero(3, 3);
    CHECK(nullspace(zero).cols() == 3);

    VecQ a(2), b(2);
    a << 1, 0;
    b << 1, 0;
    MatQ ab = a * b.transpose();
    MatQ ker = nullspace(ab);
    REQUIRE(ker.cols() == 1);
    CHECK(ker(0, 0) == 0);
    CHECK(ker(1, 0) != 0);

    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int r = static_cast<int>(rng.next_int(1, 5)), c = static_cast<int>(rng.next_int(1, 5));
        MatQ m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = Rat(rng.next_int(-4, 4));
        CHECK(rank(m.eval()) + nullspace(m.eval()).cols() == c);
        MatQ ker2 = nullspace(m.eval());
        if (ker2.cols() > 0) CHECK((m * ker2).isZero(0));
    }
}

TEST_CASE("subspace arithmetic") {
    MatQ e1 = MatQ::Zero(2, 1), e2 = MatQ::Zero(2, 1);
    e1(0, 0) = 1;
    e2(1, 0) = 1;
    Subspace<Rat> s1 = make_span<Rat>(2, e1), s2 = make_span<Rat>(2, e2);
    CHECK(subspace_sum_dim(s1, s2) == 2);
    CHECK(subspace_sum_dim(s1, s1) == s1.dim());  // idempotence

    Subspace<Rat> s3;
    s3.ambient = 3;
    CHECK_THROWS_AS(subspace_sum_dim(s1, s3), std::invalid_argument);

    // intersection of two planes in R^3 is a line
    MatQ p1(3, 2), p2(3, 2);
    p1 << 1, 0, 0, 1, 0, 0;  // span{e1,e2}
    p2 << 0, 0, 1, 0, 0, 1;  // span{e2,e3}
    auto inter = subspace_intersection(make_span<Rat>(3, p1), make_span<Rat>(3, p2));
    REQUIRE(inter.dim() == 1);
    CHECK(inter.basis(0, 0) == 0);
    CHECK(inter.basis(2, 0) == 0);
}

TEST_CASE("exact solve") {
    MatQ a(2, 2);
    a << 1, 2, 3, 4;
    VecQ b(2);
    b << 5, 6;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((a * *x - b).isZero(0));

    MatQ sing(2, 2);
    sing << 1, 1, 1, 1;
    VecQ bad(2);
    bad << 0, 1;
    CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("det2_rank1_pair closed form") {
    VecQ e1(2), e2(2);
    e1 << 1, 0;
    e2 << 0, 1;

    // parallel columns
    auto r0 = det2_rank1_pair(e1, e1, e1, e1);
    CHECK(r0.det_plus == 0);
    CHECK(r0.closed_form == 0);

    // a=(1,0), b=(1,0), c=(0,1), d=(0,1): a⊗b + c⊗d = I
    auto r1 = det2_rank1_pair(e1, e1, e2, e2);
    CHECK(r1.det_plus == 1);
    CHECK(r1.closed_form == 1);

    // the identity holds for the "+" expansion on every integer input; the
    // "-" expansion carries the opposite sign
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        VecQ a(2), b(2), c(2), d(2);
        for (int i = 0; i < 2; ++i) {
            a(i) = Rat(rng.next_int(-9, 9));
            b(i) = Rat(rng.next_int(-9, 9));
            c(i) = Rat(rng.next_int(-9, 9));
            d(i) = Rat(rng.next_int(-9, 9));
        }
        auto r = det2_rank1_pair(a, b, c, d);
        CHECK(r.det_plus == r.closed_form);
        CHECK(r.det_minus == -r.closed_form);
    }
}

TEST_CASE("times_J") {
    VecQ a(2), b(2);
    a << 1, 0;
    b << 1, 0;
    MatQ r = times_J(a, b);
    CHECK(r(0, 0) == 0);
    CHECK(r(0, 1) == -1);
    CHECK(r(1, 0) == 0);
    CHECK(r(1, 1) == 0);

    VecQ z = VecQ::Zero(2);
    CHECK(times_J(z, b).isZero(0));

    // (a⊗b)J == -a⊗b^perp identically
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        VecQ aa(2), bb(2);
        for (int i = 0; i < 2; ++i) {
            aa(i) = Rat(rng.next_int(-9, 9));
            bb(i) = Rat(rng.next_int(-9, 9));
        }
        MatQ lhs = times_J(aa, bb);
        MatQ rhs = -(aa * perp2(bb).transpose());
        CHECK((lhs - rhs).isZero(0));
    }

    // Y_1 of the 2-D certificate: [[0,0],[-4780,0]] * J = [[0,0],[0,4780]]
    MatQ y1(2, 2);
    y1 << 0, 0, -4780, 0;
    MatQ yj = y1 * matJ<Rat>();
    CHECK(yj(1, 1) == 4780);
    CHECK(yj(0, 0) == 0);
    CHECK(yj(0, 1) == 0);
    CHECK(yj(1, 0) == 0);
}

TEST_CASE("float vs exact agreement") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int r = static_cast<int>(rng.next_int(2, 6)), c = static_cast<int>(rng.next_int(2, 6));
        MatQ mq(r, c);
        MatD md(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                long v = rng.next_int(-20, 20);
                mq(i, j) = Rat(v);
                md(i, j) = static_cast<double>(v);
            }
        CHECK(rank(mq.eval()) == rank(md.eval()));
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK(rat_from_string("-3/7") == Rat(-3, 7));
    CHECK(rat_from_string("12") == Rat(12));
    CHECK(rat_from_string("30000000000000000000000000000000000000001/3") * 3 ==
          Rat(BigInt("30000000000000000000000000000000000000001")));
}

TEST_CASE("exact sqrt") {
    CHECK(exact_sqrt(Rat(1, 4)) == Rat(1, 2));
    CHECK(exact_sqrt(Rat(9)) == Rat(3));
    CHECK(!exact_sqrt(Rat(2)).has_value());
    CHECK(!exact_sqrt(Rat(-1)).has_value());
}
