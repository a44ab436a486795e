#include "tconfig/rconn.hpp"

#include "doctest.h"

using namespace tconfig;

namespace {

RParam<Rat> random_rparam(Rng& rng, int M, int n, bool nonzero_u = true) {
    RParam<Rat> p = RParam<Rat>::Zero(M, n);
    while (p.b.isZero(0))
        for (int i = 0; i < n; ++i) p.b(i) = Rat(rng.next_int(-4, 4));
    for (int i = 0; i < M; ++i) p.u(i) = Rat(rng.next_int(-4, 4));
    if (nonzero_u && p.u.isZero(0)) p.u(0) = 1;
    for (int j = 0; j < p.v.data.cols(); ++j)
        for (int i = 0; i < M; ++i) p.v.data(i, j) = Rat(rng.next_int(-4, 4));
    return p;
}

}  // namespace

TEST_CASE("assemble") {
    // first step of the 2-D certificate: b = e1, u = (1,1)
    RParam<Rat> p = RParam<Rat>::Zero(2, 2);
    p.b << 1, 0;
    p.u << 1, 1;
    PairPoint<Rat> a1 = assemble(p);
    CHECK(a1.X(0, 0) == 1);
    CHECK(a1.X(1, 0) == 1);
    CHECK(a1.X(0, 1) == 0);
    CHECK(a1.Y.isZero(0));

    CHECK(assemble(RParam<Rat>::Zero(2, 3)).is_zero());

    // b = e2, u = 0, v_{12} = a'': X = 0 and Y = (a'' | 0 | ... | 0)
    RParam<Rat> q = RParam<Rat>::Zero(2, 3);
    q.b << 0, 1, 0;
    VecQ app(2);
    app << 5, -7;
    q.v.set(0, 1, app);
    PairPoint<Rat> c2 = assemble(q);
    CHECK(c2.X.isZero(0));
    CHECK((c2.Y.col(0) - app).isZero(0));
    CHECK(c2.Y.col(1).isZero(0));
    CHECK(c2.Y.col(2).isZero(0));
}

TEST_CASE("membership round trip") {
    Rng rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        int M = static_cast<int>(rng.next_int(2, 3));
        int n = static_cast<int>(rng.next_int(2, 4));
        RParam<Rat> p = random_rparam(rng, M, n, false);
        PairPoint<Rat> z = assemble(p);
        RMembership<Rat> m = is_in_R(z);
        REQUIRE(m.in_R);
        CHECK(assemble(*m.param) == z);
    }

    // X of full rank is rejected
    PairPoint<Rat> id = PairPoint<Rat>::Zero(2, 2);
    id.X = MatQ::Identity(2, 2);
    RMembership<Rat> m = is_in_R(id);
    CHECK(!m.in_R);
    CHECK(m.witness == "X block has rank > 1");

    // X = 0: membership iff Y has nontrivial right kernel
    PairPoint<Rat> yfull = PairPoint<Rat>::Zero(2, 2);
    yfull.Y = MatQ::Identity(2, 2);
    CHECK(!is_in_R(yfull).in_R);
    PairPoint<Rat> ydeg = PairPoint<Rat>::Zero(2, 2);
    ydeg.Y << 1, 0, 2, 0;
    CHECK(is_in_R(ydeg).in_R);
}

TEST_CASE("R is a cone") {
    Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        RParam<Rat> p = random_rparam(rng, 2, 3, false);
        PairPoint<Rat> z = assemble(p);
        Rat lambda(rng.next_int(-6, 6));
        CHECK(is_in_R<Rat>(z * lambda).in_R);
    }
}

TEST_CASE("closedness proxy in float mode") {
    // assemble a convergent sequence of R-elements; the float limit is
    // accepted at tolerance
    RParam<double> base = RParam<double>::Zero(2, 3);
    base.b << 0.6, 0.8, 0.0;
    base.u << 1.0, -2.0;
    VecD w(2);
    w << 0.5, 0.25;
    base.v.set(0, 2, w);
    PairPoint<double> limit = assemble(base);
    PairPoint<double> approx = limit;
    for (int k = 1; k <= 20; ++k) {
        RParam<double> p = base;
        p.u(0) += std::pow(2.0, -k);
        approx = assemble(p);
    }
    CHECK(is_in_R(approx, 1e-6).in_R);
    CHECK(is_in_R(limit, 1e-9).in_R);
}

TEST_CASE("recover canonical gauge") {
    Rng rng(107);
    for (int trial = 0; trial < 500; ++trial) {
        int M = static_cast<int>(rng.next_int(2, 3));
        int n = static_cast<int>(rng.next_int(2, 4));
        RParam<Rat> p = random_rparam(rng, M, n);
        PairPoint<Rat> z = assemble(p);
        RParam<Rat> r = recover(z);
        CHECK(assemble(r) == z);
        // recovery is idempotent: re-canonicalizing changes nothing
        RParam<Rat> r2 = recover(assemble(r));
        CHECK((r.b - r2.b).isZero(0));
        CHECK((r.u - r2.u).isZero(0));
        CHECK((r.v.data - r2.v.data).isZero(0));
    }

    // u = 0 leaves the b-gauge ambiguous
    RParam<Rat> q = RParam<Rat>::Zero(2, 3);
    q.b << 0, 1, 0;
    VecQ app(2);
    app << 1, 1;
    q.v.set(0, 1, app);
    CHECK_THROWS_WITH(recover(assemble(q)), "not in R^o, X part vanishes");
}

TEST_CASE("gauge shifts do not change the element") {
    // two parameters differing by an o_a ⊗ o_b (a,b >= 2) shift in v
    // assemble identically
    Rng rng(109);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4, M = 2;
        RParam<Rat> p = random_rparam(rng, M, n);
        auto frame = detail::orthogonal_completion(p.b);
        REQUIRE(frame.size() == static_cast<size_t>(n));
        RParam<Rat> q = p;
        VecQ wvec(2);
        wvec << Rat(rng.next_int(-3, 3)), Rat(rng.next_int(-3, 3));
        const VecQ &oa = frame[1], &ob = frame[2];
        for (int al = 0; al < n; ++al)
            for (int be = al + 1; be < n; ++be) {
                Rat w = oa(al) * ob(be) - ob(al) * oa(be);
                if (w == 0) continue;
                q.v.set(al, be, (q.v.get(al, be) + wvec * w).eval());
            }
        CHECK(assemble(q) == assemble(p));
        // and both recover to the same canonical parameter
        RParam<Rat> rp = recover(assemble(p)), rq = recover(assemble(q));
        CHECK((rp.v.data - rq.v.data).isZero(0));
    }
}

TEST_CASE("chain connect") {
    PairPoint<Rat> A = PairPoint<Rat>::Zero(2, 3);
    CHECK(chain_connect(A, A).size() == 1);

    // difference of the (a',a'')⊗e1 shape: X and Y steps through C^1, C^2
    PairPoint<Rat> B = PairPoint<Rat>::Zero(2, 3);
    B.X.col(0) << 1, -1;
    B.Y.col(0) << 2, 3;
    auto chain = chain_connect(A, B);
    CHECK(chain.size() == 3);
    CHECK(chain.front() == A);
    CHECK(chain.back() == B);
    for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(is_in_R<Rat>(chain[i + 1] - chain[i]).in_R);

    Rng rng(113);
    for (int trial = 0; trial < 100; ++trial) {
        int M = 2, n = 3;
        PairPoint<Rat> a = PairPoint<Rat>::Zero(M, n), b = PairPoint<Rat>::Zero(M, n);
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < n; ++j) {
                a.X(i, j) = Rat(rng.next_int(-9, 9));
                a.Y(i, j) = Rat(rng.next_int(-9, 9));
                b.X(i, j) = Rat(rng.next_int(-9, 9));
                b.Y(i, j) = Rat(rng.next_int(-9, 9));
            }
        auto ch = chain_connect(a, b);
        CHECK(ch.size() <= static_cast<size_t>(2 * n + 1));
        CHECK(ch.front() == a);
        CHECK(ch.back() == b);
        double total = (a - b).norm();
        for (size_t i = 0; i + 1 < ch.size(); ++i) {
            CHECK(is_in_R<Rat>(ch[i + 1] - ch[i]).in_R);
            CHECK((ch[i + 1] - ch[i]).norm() <= 2 * n * total + 1e-12);
        }
    }
}

TEST_CASE("tangent space dimensions") {
    Rng rng(127);
    // M = n = 2: dim = n(M+1)-1 = 5
    RParam<Rat> p22 = random_rparam(rng, 2, 2);
    CHECK(tangent_frakC(p22).dim() == 5);
    // M = 2, n = 3: dim = 8
    RParam<Rat> p23 = random_rparam(rng, 2, 3);
    CHECK(tangent_frakC(p23).dim() == 8);
    // M = 3, n = 4: dim = 4*4-1 = 15
    RParam<Rat> p34 = random_rparam(rng, 3, 4);
    CHECK(tangent_frakC(p34).dim() == 15);

    // X-part of every basis vector lies in span{u ⊗ db, du ⊗ b}
    Subspace<Rat> f = tangent_frakC(p23);
    int M = 2, n = 3;
    MatQ xspan(M * n, n + M);
    for (int g = 0; g < n; ++g) {
        MatQ e = MatQ::Zero(M, n);
        e.col(g) = p23.u;
        xspan.col(g) = Eigen::Map<MatQ>(e.data(), M * n, 1);
    }
    for (int m = 0; m < M; ++m) {
        MatQ e = MatQ::Zero(M, n);
        e.row(m) = p23.b.transpose();
        xspan.col(n + m) = Eigen::Map<MatQ>(e.data(), M * n, 1);
    }
    Subspace<Rat> xs = make_span<Rat>(M * n, xspan);
    for (int j = 0; j < f.dim(); ++j) {
        PairPoint<Rat> w = unflatten(f.basis.col(j).eval(), M, n);
        MatQ xw = w.X;
        MatQ stacked(M * n, xs.dim() + 1);
        stacked.leftCols(xs.dim()) = xs.basis;
        stacked.col(xs.dim()) = Eigen::Map<MatQ>(xw.data(), M * n, 1);
        CHECK(rank(stacked.eval()) == xs.dim());
    }

    RParam<Rat> degenerate = RParam<Rat>::Zero(2, 2);
    degenerate.b << 1, 0;
    CHECK_THROWS_AS(tangent_frakC(degenerate), std::invalid_argument);
}
