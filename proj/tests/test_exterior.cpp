#include "tconfig/exterior.hpp"

#include "doctest.h"

using namespace tconfig;

namespace {

VForm<Rat> random_form(Rng& rng, int n, int M, int k) {
    VForm<Rat> f(n, M, k);
    for (Mask m = 0; m < (Mask(1) << n); ++m) {
        if (mask_popcount(m) != k) continue;
        VecQ v(M);
        for (int i = 0; i < M; ++i) v(i) = Rat(rng.next_int(-5, 5));
        f.add(m, v);
    }
    return f;
}

}  // namespace

TEST_CASE("hodge in two dimensions") {
    // ⋆dx^1 = dx^2, ⋆dx^2 = -dx^1
    VForm<Rat> dx1(2, 1, 1), dx2(2, 1, 1);
    VecQ one(1);
    one << 1;
    dx1.add(0b01, one);
    dx2.add(0b10, one);
    VForm<Rat> s1 = hodge(dx1);
    CHECK(s1.coeff(0b10)(0) == 1);
    VForm<Rat> s2 = hodge(dx2);
    CHECK(s2.coeff(0b01)(0) == -1);
}

TEST_CASE("hodge in three dimensions") {
    // ⋆dx^2 = -dx^1∧dx^3
    VForm<Rat> dx2(3, 1, 1);
    VecQ one(1);
    one << 1;
    dx2.add(0b010, one);
    VForm<Rat> s = hodge(dx2);
    CHECK(s.coeff(0b101)(0) == -1);
}

TEST_CASE("hodge involution sign law") {
    Rng rng(17);
    int cases = 0;
    while (cases < 500) {
        int n = static_cast<int>(rng.next_int(1, 5));
        int k = static_cast<int>(rng.next_int(0, n));
        int M = static_cast<int>(rng.next_int(1, 3));
        VForm<Rat> f = random_form(rng, n, M, k);
        VForm<Rat> ss = hodge(hodge(f));
        int sign = ((k * (n - k)) % 2 == 0) ? 1 : -1;
        CHECK(ss == f * Rat(sign));
        ++cases;
    }
}

TEST_CASE("wedge1") {
    VecQ e1 = VecQ::Zero(3);
    e1(0) = 1;

    // dx^1 ∧ (coefficient on dx^1) = 0
    VForm<Rat> f(3, 1, 1);
    VecQ one(1);
    one << 1;
    f.add(0b001, one);
    CHECK(wedge1(e1, f).coeffs.empty());

    // b = e1 on a 0-form u gives u dx^1
    VForm<Rat> zero_form(3, 2, 0);
    VecQ u(2);
    u << 3, -2;
    zero_form.add(0, u);
    VForm<Rat> w = wedge1(e1, zero_form);
    CHECK((w.coeff(0b001) - u).isZero(0));

    // n=3: a'' ⋆(dx^1∧dx^2) = a'' dx^3, and e1 ∧ (a'' dx^3) = a'' dx^1∧dx^3
    VForm<Rat> pre(3, 2, 2);
    pre.add(0b011, u);  // dx^1 ∧ dx^2 coefficient
    VForm<Rat> starred = hodge(pre);
    CHECK((starred.coeff(0b100) - u).isZero(0));  // ⋆(dx^1∧dx^2) = +dx^3
    VForm<Rat> lifted = wedge1(e1, starred);
    CHECK((lifted.coeff(0b101) - u).isZero(0));

    // wedge1(b, wedge1(b, f)) = 0
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.next_int(2, 5));
        int k = static_cast<int>(rng.next_int(0, n - 2));
        VForm<Rat> g = random_form(rng, n, 2, k);
        VecQ b(n);
        for (int i = 0; i < n; ++i) b(i) = Rat(rng.next_int(-3, 3));
        CHECK(wedge1(b, wedge1(b, g)).coeffs.empty());
    }
}

TEST_CASE("pair identification") {
    // omega' = u b_a dx^a, omega'' = 0  =>  X = u⊗b, Y = 0
    int n = 3, M = 2;
    VecQ u(M), b(n);
    u << 2, -1;
    b << 1, 4, -2;
    VForm<Rat> w1(n, M, 1), w2(n, M, n - 1);
    for (int a = 0; a < n; ++a) w1.add(Mask(1) << a, (u * b(a)).eval());
    PairPoint<Rat> p = to_pair(w1, w2);
    CHECK((p.X - u * b.transpose()).isZero(0));
    CHECK(p.Y.isZero(0));

    // roundtrip from_pair -> to_pair is the identity
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int nn = static_cast<int>(rng.next_int(2, 5));
        int MM = static_cast<int>(rng.next_int(2, 3));
        VForm<Rat> f1 = random_form(rng, nn, MM, 1);
        VForm<Rat> f2 = random_form(rng, nn, MM, nn - 1);
        PairPoint<Rat> q = to_pair(f1, f2);
        auto [g1, g2] = from_pair(q);
        CHECK(g1 == f1);
        CHECK(g2 == f2);
        PairPoint<Rat> q2 = to_pair(g1, g2);
        CHECK(q2 == q);
    }

    // linearity of the identification
    Rng rng2(37);
    for (int trial = 0; trial < 50; ++trial) {
        int nn = static_cast<int>(rng2.next_int(2, 4));
        VForm<Rat> f1 = random_form(rng2, nn, 2, 1);
        VForm<Rat> f2 = random_form(rng2, nn, 2, nn - 1);
        VForm<Rat> g1 = random_form(rng2, nn, 2, 1);
        VForm<Rat> g2 = random_form(rng2, nn, 2, nn - 1);
        Rat s(rng2.next_int(-5, 5));
        PairPoint<Rat> lhs = to_pair(f1 * s + g1, f2 * s + g2);
        PairPoint<Rat> rhs = to_pair(f1, f2) * s + to_pair(g1, g2);
        CHECK(lhs == rhs);
    }

    VForm<Rat> bad(3, 2, 2);
    CHECK_THROWS_AS(to_pair(bad, w2), std::invalid_argument);
}

TEST_CASE("flatten round trip") {
    Rng rng(41);
    PairPoint<Rat> p = PairPoint<Rat>::Zero(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            p.X(i, j) = Rat(rng.next_int(-9, 9));
            p.Y(i, j) = Rat(rng.next_int(-9, 9));
        }
    CHECK(unflatten(flatten(p), 2, 3) == p);
}
