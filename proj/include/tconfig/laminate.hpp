#pragma once

// Finitely supported laminates: barycenters, elementary splittings along
// R-segments, the staircase iteration that pushes a Dirac at a base point
// toward the endpoint atoms, and a sampling probe for R-convexity.
//
// Every splitting preserves the barycenter bit-exactly in exact mode; the
// split trace is recorded so the wiggle construction can replay it.

#include "tconfig/tnconfig.hpp"

#include <functional>
#include <vector>

namespace tconfig {

template <class T>
struct Laminate {
    struct Atom {
        T w;
        PairPoint<T> p;
    };
    std::vector<Atom> atoms;

    // weights must sum to one; equal points are merged on insert
    void add(const T& w, const PairPoint<T>& p) {
        if (w == T(0)) return;
        for (auto& a : atoms)
            if (a.p == p) {
                a.w += w;
                return;
            }
        atoms.push_back({w, p});
    }

    T total_weight() const {
        T s(0);
        for (const auto& a : atoms) s += a.w;
        return s;
    }

    int find(const PairPoint<T>& p) const {
        for (size_t i = 0; i < atoms.size(); ++i)
            if (atoms[i].p == p) return static_cast<int>(i);
        return -1;
    }
};

template <class T>
PairPoint<T> barycenter(const Laminate<T>& nu) {
    if (nu.atoms.empty()) throw std::invalid_argument("barycenter of an empty laminate");
    PairPoint<T> s = PairPoint<T>::Zero(nu.atoms[0].p.M(), nu.atoms[0].p.n());
    for (const auto& a : nu.atoms) s = s + a.p * a.w;
    return s;
}

// One elementary splitting step, recorded for replay by the wiggle module.
template <class T>
struct SplitStep {
    PairPoint<T> A;   // atom that was split
    PairPoint<T> B1;  // A = (1-s) B1 + s B2, B2 - B1 in R
    PairPoint<T> B2;
    T s;
};

// Replace atom `idx` by (1-s) delta_{B1} + s delta_{B2}. Preconditions:
// A = (1-s)B1 + sB2 exactly and B2 - B1 in R.
template <class T>
Laminate<T> split(const Laminate<T>& nu, int idx, const PairPoint<T>& B1, const PairPoint<T>& B2,
                  const T& s, T tol = T(0)) {
    if (idx < 0 || idx >= static_cast<int>(nu.atoms.size()))
        throw std::out_of_range("split: atom index out of range");
    if (s < T(0) || s > T(1)) throw std::invalid_argument("split: s outside [0,1]");
    const PairPoint<T>& A = nu.atoms[idx].p;
    PairPoint<T> comb = B1 * (T(1) - s) + B2 * s;
    bool collinear;
    if constexpr (scalar_traits<T>::is_exact) {
        collinear = (comb == A);
    } else {
        collinear = (comb - A).norm() <= ((tol == T(0)) ? kDefaultFloatTol : tol) * (1.0 + A.norm());
    }
    if (!collinear || !is_in_R<T>(B2 - B1, tol).in_R)
        throw std::invalid_argument("not an R-segment split");
    Laminate<T> out;
    for (int i = 0; i < static_cast<int>(nu.atoms.size()); ++i) {
        if (i == idx) {
            out.add(T(nu.atoms[i].w * (T(1) - s)), B1);
            out.add(T(nu.atoms[i].w * s), B2);
        } else {
            out.add(nu.atoms[i].w, nu.atoms[i].p);
        }
    }
    return out;
}

template <class T>
struct LaminateTrace {
    std::vector<SplitStep<T>> steps;
    std::vector<T> base_weight;  // t_m after each step
    T max_s = T(0);              // contraction factor max_i s_i
};

// The T_N staircase: starting from delta_{P_k}, split the unique base atom
// with ratio s_l = 1 - 1/kappa_{l-1} (cyclic), walking l -> l-1. After m
// steps there is exactly one base atom of weight t_m <= (max s)^m and the
// barycenter stays P_k.
template <class T>
std::pair<Laminate<T>, LaminateTrace<T>> tn_laminate(const TNConfig<T>& c, int k, int m_steps,
                                                     T tol = T(0)) {
    const int N = c.N();
    if (k < 1 || k > N) throw std::out_of_range("tn_laminate: k out of range");
    std::vector<PairPoint<T>> P(N + 1), Z(N + 1);
    for (int i = 1; i <= N; ++i) {
        P[i] = base_point(c, i);
        Z[i] = endpoint(c, i);
    }
    Laminate<T> nu;
    nu.add(T(1), P[k]);
    LaminateTrace<T> tr;
    for (int i = 0; i < N; ++i) {
        T s = T(1) - T(1) / c.kappas[i];
        if (s > tr.max_s) tr.max_s = s;
    }
    int l = k;
    T t(1);
    for (int m = 0; m < m_steps; ++m) {
        int prev = (l == 1) ? N : l - 1;  // cyclic predecessor
        T s = T(1) - T(1) / c.kappas[prev - 1];
        // P_l = s P_prev + (1-s) Z_prev
        int idx = nu.find(P[l]);
        if (idx < 0) throw std::runtime_error("tn_laminate: base atom lost");
        nu = split(nu, idx, P[prev], Z[prev], T(T(1) - s), tol);
        tr.steps.push_back({P[l], P[prev], Z[prev], T(T(1) - s)});
        t *= s;
        tr.base_weight.push_back(t);
        l = prev;
    }
    return {nu, tr};
}

// The sigma-laminate: barycenter (1-lambda) P_k + lambda Z_k, built from one
// split toward the mu-scaled endpoint and a base-point staircase on the
// remaining mass. Requires 0 <= lambda <= mu < 1 and mu kappa_i > 1.
template <class T>
std::pair<Laminate<T>, LaminateTrace<T>> staircase(const TNConfig<T>& c, int k, const T& lambda,
                                                   const T& mu, int m_steps, T tol = T(0)) {
    const int N = c.N();
    if (k < 1 || k > N) throw std::out_of_range("staircase: k out of range");
    if (lambda < T(0) || lambda > mu || !(mu < T(1)))
        throw std::invalid_argument("staircase: need 0 <= lambda <= mu < 1");
    TNConfig<T> sc = kappa_scale(c, mu);  // throws unless mu*kappa_i > 1
    PairPoint<T> Pk = base_point(c, k);
    PairPoint<T> Zk = endpoint(c, k);
    PairPoint<T> Ztk = endpoint(sc, k);  // (1-mu) P_k + mu Z_k
    PairPoint<T> Zbar = Pk * (T(1) - lambda) + Zk * lambda;

    Laminate<T> nu;
    nu.add(T(1), Zbar);
    LaminateTrace<T> tr;
    T w = lambda / mu;  // Zbar = (1 - w) P_k + w Zt_k
    if (w < T(1)) {
        nu = split(nu, 0, Pk, Ztk, w, tol);
        tr.steps.push_back({Zbar, Pk, Ztk, w});
        // staircase the P_k mass through the scaled configuration
        auto [sub, subtr] = tn_laminate(sc, k, m_steps, tol);
        for (size_t i = 0; i < subtr.steps.size(); ++i) {
            const auto& st = subtr.steps[i];
            int idx = nu.find(st.A);
            if (idx < 0) throw std::runtime_error("staircase: base atom lost");
            nu = split(nu, idx, st.B1, st.B2, st.s, tol);
            tr.steps.push_back(st);
            tr.base_weight.push_back(T((T(1) - w) * subtr.base_weight[i]));
        }
        tr.max_s = subtr.max_s;
    } else {
        // lambda = mu: the whole mass sits at the scaled endpoint
        nu.atoms.clear();
        nu.add(T(1), Ztk);
    }
    return {nu, tr};
}

// ===== R-convexity probe ====================================================

template <class T>
struct RConvexityReport {
    T max_violation = T(0);
    PairPoint<T> witness_A, witness_B;
    T witness_t = T(0);
};

// Sampled convexity test along random R-segments: reports the largest
// violation of f(tA + (1-t)B) <= t f(A) + (1-t) f(B).
template <class T>
RConvexityReport<T> rconvexity_probe(const std::function<T(const PairPoint<T>&)>& f, int M, int n,
                                     int samples, std::uint64_t seed) {
    Rng rng(seed);
    RConvexityReport<T> rep;
    rep.witness_A = PairPoint<T>::Zero(M, n);
    rep.witness_B = PairPoint<T>::Zero(M, n);
    const int tgrid = 8;
    for (int s = 0; s < samples; ++s) {
        PairPoint<T> A = PairPoint<T>::Zero(M, n);
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < n; ++j) {
                A.X(i, j) = rng.template next_scalar<T>(-5, 5);
                A.Y(i, j) = rng.template next_scalar<T>(-5, 5);
            }
        RParam<T> dir = RParam<T>::Zero(M, n);
        while (dir.b.isZero(0))
            for (int j = 0; j < n; ++j) dir.b(j) = rng.template next_scalar<T>(-3, 3);
        for (int i = 0; i < M; ++i) dir.u(i) = rng.template next_scalar<T>(-3, 3);
        for (int j = 0; j < dir.v.data.cols(); ++j)
            for (int i = 0; i < M; ++i) dir.v.data(i, j) = rng.template next_scalar<T>(-3, 3);
        PairPoint<T> B = A + assemble(dir);
        T fA = f(A), fB = f(B);
        for (int g = 1; g < tgrid; ++g) {
            T t = T(g) / T(tgrid);
            T lhs = f(A * t + B * (T(1) - t));
            T rhs = t * fA + (T(1) - t) * fB;
            T viol = lhs - rhs;
            if (viol > rep.max_violation) {
                rep.max_violation = viol;
                rep.witness_A = A;
                rep.witness_B = B;
                rep.witness_t = t;
            }
        }
    }
    return rep;
}

}  // namespace tconfig
