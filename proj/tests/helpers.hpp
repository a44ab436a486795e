#pragma once

// Shared test helpers: randomized nondegenerate configurations built by
// sampling step directions and solving the zero-sum constraints exactly.

#include "tconfig/certdata.hpp"

namespace tconfig::testing {

inline RParam<Rat> random_rparam(Rng& rng, int M, int n) {
    RParam<Rat> p = RParam<Rat>::Zero(M, n);
    while (p.b.isZero(0))
        for (int i = 0; i < n; ++i) p.b(i) = Rat(rng.next_int(-4, 4));
    while (p.u.isZero(0))
        for (int i = 0; i < M; ++i) p.u(i) = Rat(rng.next_int(-4, 4));
    for (int j = 0; j < p.v.data.cols(); ++j)
        for (int i = 0; i < M; ++i) p.v.data(i, j) = Rat(rng.next_int(-4, 4));
    return p;
}

// A nondegenerate T_N-configuration with zero base point: directions are
// sampled, then the u- and v-blocks are drawn from the exact kernels of the
// linear zero-sum constraints; retried until every nondegeneracy condition
// holds.
inline TNConfig<Rat> random_tnconfig(std::uint64_t seed, int M, int n, int N,
                                     int max_attempts = 200) {
    Rng rng(seed);
    const int P = n * (n - 1) / 2;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<VecQ> bs;
        for (int i = 0; i < N; ++i) {
            VecQ b = VecQ::Zero(n);
            while (b.isZero(0))
                for (int j = 0; j < n; ++j) b(j) = Rat(rng.next_int(-3, 3));
            bs.push_back(b);
        }
        // u's from the kernel of (u_1..u_N) -> sum u_i b_i^T
        MatQ cu = MatQ::Zero(M * n, M * N);
        for (int i = 0; i < N; ++i)
            for (int m = 0; m < M; ++m)
                for (int a = 0; a < n; ++a) cu(m * n + a, i * M + m) = bs[i](a);
        MatQ keru = nullspace(cu);
        if (keru.cols() == 0) continue;
        VecQ uu = VecQ::Zero(M * N);
        for (int j = 0; j < keru.cols(); ++j) uu += Rat(rng.next_int(-3, 3)) * keru.col(j);
        // v's from the kernel of (v_1..v_N) -> sum_i L_{v_i} b_i
        MatQ cv = MatQ::Zero(M * n, M * P * N);
        for (int i = 0; i < N; ++i) {
            int pr = 0;
            for (int a = 0; a < n; ++a)
                for (int b2 = a + 1; b2 < n; ++b2, ++pr)
                    for (int m = 0; m < M; ++m) {
                        // v_{a b2} contributes +b(b2) to column a, -b(a) to column b2
                        cv(m * n + a, i * M * P + pr * M + m) += bs[i](b2);
                        cv(m * n + b2, i * M * P + pr * M + m) -= bs[i](a);
                    }
        }
        MatQ kerv = nullspace(cv);
        VecQ vv = VecQ::Zero(M * P * N);
        for (int j = 0; j < kerv.cols(); ++j) vv += Rat(rng.next_int(-3, 3)) * kerv.col(j);

        TNConfig<Rat> c;
        c.P = PairPoint<Rat>::Zero(M, n);
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            RParam<Rat> p = RParam<Rat>::Zero(M, n);
            p.b = bs[i];
            p.u = uu.segment(i * M, M);
            if (p.u.isZero(0)) { ok = false; break; }
            for (int pr = 0; pr < P; ++pr) p.v.data.col(pr) = vv.segment(i * M * P + pr * M, M);
            c.steps.push_back(p);
            c.kappas.push_back(Rat(rng.next_int(3, 6)) / Rat(2));  // kappa in {3/2, 2, 5/2, 3}
        }
        if (!ok) continue;
        if (!c.step_sum().is_zero()) continue;
        if (!check_nondegenerate(c).pass()) continue;
        return c;
    }
    throw std::runtime_error("random_tnconfig: no nondegenerate sample found");
}

}  // namespace tconfig::testing
