#pragma once

// The replacement for rank-one matrices: elements of R / R^o, their
// (b, u, v) parametrization, membership testing with witnesses, canonical
// recovery, chain connectivity, and the first-order variation spaces F^i.
//
// Exact mode keeps b unnormalized; every formula that the paper states for
// |b| = 1 is used here in its homogeneous form (divisions by <b,b>), so all
// arithmetic stays in Q.

#include "tconfig/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tconfig {

namespace detail {
inline int pair_index(int a, int b, int n) {
    // lex order over a < b
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == a && j == b) return idx;
            ++idx;
        }
    throw std::invalid_argument("pair_index out of range");
}
}  // namespace detail

// Antisymmetric array v_{ab} in R^M, a,b = 0..n-1; only a < b stored.
template <class T>
struct SoN {
    int n = 0, M = 0;
    Mat<T> data;  // M x n(n-1)/2, column per pair (a<b) in lex order

    SoN() = default;
    SoN(int n_, int M_) : n(n_), M(M_), data(Mat<T>::Zero(M_, n_ * (n_ - 1) / 2)) {}

    Vec<T> get(int a, int b) const {
        if (a == b) return Vec<T>::Zero(M);
        if (a < b) return data.col(detail::pair_index(a, b, n));
        return -data.col(detail::pair_index(b, a, n));
    }
    void set(int a, int b, const Vec<T>& v) {
        if (a == b) throw std::invalid_argument("diagonal of an antisymmetric array");
        if (a < b)
            data.col(detail::pair_index(a, b, n)) = v;
        else
            data.col(detail::pair_index(b, a, n)) = -v;
    }
    bool is_zero() const { return data.isZero(0); }

    SoN operator+(const SoN& o) const {
        SoN r = *this;
        r.data += o.data;
        return r;
    }
    SoN operator*(const T& s) const {
        SoN r = *this;
        r.data *= s;
        return r;
    }
};

// Parametrization of an R-element: X-block u ⊗ b, Y-block columns
// sum_b v_{ab} b_b.
template <class T>
struct RParam {
    Vec<T> b;  // R^n; unnormalized in exact mode
    Vec<T> u;  // R^M
    SoN<T> v;

    RParam() = default;
    RParam(const Vec<T>& b_, const Vec<T>& u_, const SoN<T>& v_) : b(b_), u(u_), v(v_) {
        if (v.n != static_cast<int>(b.size()) || v.M != static_cast<int>(u.size()))
            throw std::invalid_argument("RParam dimension mismatch");
    }
    static RParam Zero(int M, int n) {
        return RParam(Vec<T>::Zero(n), Vec<T>::Zero(M), SoN<T>(n, M));
    }

    int n() const { return static_cast<int>(b.size()); }
    int M() const { return static_cast<int>(u.size()); }
};

template <class T>
PairPoint<T> assemble(const RParam<T>& p) {
    const int M = p.M(), n = p.n();
    Mat<T> X = p.u * p.b.transpose();
    Mat<T> Y = Mat<T>::Zero(M, n);
    for (int a = 0; a < n; ++a) {
        Vec<T> col = Vec<T>::Zero(M);
        for (int bb = 0; bb < n; ++bb) {
            if (p.b(bb) == T(0)) continue;
            col += p.v.get(a, bb) * p.b(bb);
        }
        Y.col(a) = col;
    }
    return PairPoint<T>(X, Y);
}

// ===== membership ===========================================================

template <class T>
struct RMembership {
    bool in_R = false;
    std::optional<RParam<T>> param;  // a representative when in_R
    std::string witness;             // failure reason otherwise
};

namespace detail {

// Rank-one factorization X = u b^T; empty when rank(X) > 1.
template <class T>
std::optional<std::pair<Vec<T>, Vec<T>>> rank_one_factor(const Mat<T>& X, T tol) {
    const int M = static_cast<int>(X.rows()), n = static_cast<int>(X.cols());
    if (rank(X, tol) > 1) return std::nullopt;
    // pick the column of largest magnitude as u
    int jc = -1;
    if constexpr (scalar_traits<T>::is_exact) {
        for (int j = 0; j < n && jc < 0; ++j)
            if (!X.col(j).isZero(0)) jc = j;
    } else {
        double best = 0;
        for (int j = 0; j < n; ++j) {
            double v = X.col(j).norm();
            if (v > best) { best = v; jc = j; }
        }
    }
    if (jc < 0) return std::make_pair(Vec<T>::Zero(M), Vec<T>::Zero(n));  // X = 0
    Vec<T> u = X.col(jc);
    int ir = 0;
    if constexpr (scalar_traits<T>::is_exact) {
        while (u(ir) == T(0)) ++ir;
    } else {
        double best = 0;
        for (int i = 0; i < M; ++i)
            if (scalar_traits<T>::abs(u(i)) > best) { best = scalar_traits<T>::abs(u(i)); ir = i; }
    }
    Vec<T> b = X.row(ir).transpose() / u(ir);
    return std::make_pair(u, b);
}

// v with antisymmetry and Y col a = sum_b v_{ab} b_b, valid when Y b = 0.
template <class T>
SoN<T> v_from_Y(const Mat<T>& Y, const Vec<T>& b) {
    const int M = static_cast<int>(Y.rows()), n = static_cast<int>(Y.cols());
    T bb = b.dot(b);
    SoN<T> v(n, M);
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) v.set(a, c, ((Y.col(a) * b(c) - Y.col(c) * b(a)) / bb).eval());
    return v;
}

}  // namespace detail

// Membership in R: X = u ⊗ b with Y b = 0 for the right factor b of X;
// for X = 0 any b in the right kernel of Y works.
template <class T>
RMembership<T> is_in_R(const PairPoint<T>& p, T tol = T(0)) {
    RMembership<T> res;
    const int M = p.M(), n = p.n();
    auto fac = detail::rank_one_factor(p.X, tol);
    if (!fac) {
        res.witness = "X block has rank > 1";
        return res;
    }
    auto [u, b] = *fac;
    if (b.isZero(0)) {
        // X = 0: need a nonzero right-kernel vector of Y
        if (p.Y.isZero(0)) {
            res.in_R = true;
            RParam<T> q = RParam<T>::Zero(M, n);
            q.b(0) = T(1);
            res.param = q;
            return res;
        }
        Mat<T> ker = nullspace(p.Y, tol);
        if (ker.cols() == 0) {
            res.witness = "X = 0 and Y has trivial right kernel";
            return res;
        }
        Vec<T> bk = ker.col(0);
        res.in_R = true;
        res.param = RParam<T>(bk, Vec<T>::Zero(M), detail::v_from_Y(p.Y, bk));
        return res;
    }
    Vec<T> yb = p.Y * b;
    bool ok;
    if constexpr (scalar_traits<T>::is_exact) {
        ok = yb.isZero(0);
    } else {
        double scale = p.norm() * b.norm() + 1e-300;
        double t = (tol == T(0)) ? kDefaultFloatTol : tol;
        ok = yb.norm() <= t * scale;
    }
    if (!ok) {
        res.witness = "Y b != 0 for the right factor b of X";
        return res;
    }
    res.in_R = true;
    res.param = RParam<T>(b, u, detail::v_from_Y(p.Y, b));
    return res;
}

// ===== canonical gauge and recovery =========================================

namespace detail {

// Orthogonal (not orthonormal) completion of b: Gram-Schmidt over the
// standard basis, smallest index first. Keeps rationality.
template <class T>
std::vector<Vec<T>> orthogonal_completion(const Vec<T>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<Vec<T>> frame;
    frame.push_back(b);
    for (int i = 0; i < n && static_cast<int>(frame.size()) < n; ++i) {
        Vec<T> e = Vec<T>::Zero(n);
        e(i) = T(1);
        for (const auto& f : frame) e -= f * (f.dot(e) / f.dot(f));
        if (!e.isZero(0)) {
            if constexpr (!scalar_traits<T>::is_exact) {
                if (e.norm() < 1e-12 * (1.0 + b.norm())) continue;
            }
            frame.push_back(e);
        }
    }
    return frame;  // frame[0] = b, frame[1..n-1] span b-perp
}

}  // namespace detail

// Canonical gauge: b scaled so its first nonzero entry is 1 (exact mode) or
// |b| = 1 with first nonzero entry positive (float mode); v has no component
// along o_a⊗o_b - o_b⊗o_a for a,b >= 2 in the deterministic completion of b.
template <class T>
RParam<T> canonicalize(const RParam<T>& p) {
    const int n = p.n(), M = p.M();
    RParam<T> q = p;
    // fix the scale/sign of b
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (q.b(i) != T(0)) { first = i; break; }
    if (first < 0) throw std::invalid_argument("canonicalize: b = 0");
    T s;
    if constexpr (scalar_traits<T>::is_exact) {
        s = q.b(first);  // b /= s, u *= s, v *= s
    } else {
        double nb = q.b.norm();
        s = q.b(first) > 0 ? T(nb) : T(-nb);
    }
    q.b /= s;
    q.u *= s;
    q.v = q.v * s;
    // remove the gauge freedom in v
    auto frame = detail::orthogonal_completion(q.b);
    for (size_t a = 1; a < frame.size(); ++a)
        for (size_t c = a + 1; c < frame.size(); ++c) {
            const Vec<T>&oa = frame[a], &ob = frame[c];
            // W = oa⊗ob - ob⊗oa, ||W||^2 = 2 |oa|^2 |ob|^2 (oa ⟂ ob)
            T wnorm2 = T(2) * oa.dot(oa) * ob.dot(ob);
            // component of v^(m) along W
            Vec<T> comp = Vec<T>::Zero(M);
            for (int al = 0; al < n; ++al)
                for (int be = 0; be < n; ++be) {
                    T w = oa(al) * ob(be) - ob(al) * oa(be);
                    if (w == T(0)) continue;
                    comp += q.v.get(al, be) * w;
                }
            comp /= wnorm2;
            if (comp.isZero(0)) continue;
            for (int al = 0; al < n; ++al)
                for (int be = al + 1; be < n; ++be) {
                    T w = oa(al) * ob(be) - ob(al) * oa(be);
                    if (w == T(0)) continue;
                    q.v.set(al, be, (q.v.get(al, be) - comp * w).eval());
                }
        }
    return q;
}

// Parameter recovery for elements of R^o (u != 0). Deterministic via the
// canonical gauge; assemble(recover(p)) reproduces p.
template <class T>
RParam<T> recover(const PairPoint<T>& p, T tol = T(0)) {
    RMembership<T> m = is_in_R(p, tol);
    if (!m.in_R) throw std::invalid_argument("recover: not in R (" + m.witness + ")");
    if (m.param->u.isZero(0))
        throw std::invalid_argument("not in R^o, X part vanishes");
    return canonicalize(*m.param);
}

// ===== chain connectivity ===================================================

// A = A_1, ..., A_last = B with every consecutive difference in R and step
// norms <= |A - B|; at most 2n+1 points (column split, then X/Y split).
template <class T>
std::vector<PairPoint<T>> chain_connect(const PairPoint<T>& A, const PairPoint<T>& B) {
    const int M = A.M(), n = A.n();
    if (B.M() != M || B.n() != n) throw std::invalid_argument("chain_connect: dimension mismatch");
    std::vector<PairPoint<T>> chain;
    chain.push_back(A);
    PairPoint<T> cur = A;
    PairPoint<T> diff = B - A;
    for (int a = 0; a < n; ++a) {
        // X step: column a of the X difference, direction e_a
        if (!diff.X.col(a).isZero(0)) {
            RParam<T> step = RParam<T>::Zero(M, n);
            step.b(a) = T(1);
            step.u = diff.X.col(a);
            cur = cur + assemble(step);
            chain.push_back(cur);
        }
        // Y step: column a of the Y difference via v_{a,c} along direction e_c
        if (!diff.Y.col(a).isZero(0)) {
            int c = (a == 0) ? 1 : 0;
            RParam<T> step = RParam<T>::Zero(M, n);
            step.b(c) = T(1);
            step.v.set(a, c, diff.Y.col(a));
            cur = cur + assemble(step);
            chain.push_back(cur);
        }
    }
    return chain;
}

// ===== tangent space F ======================================================

// The linear space F of first-order variations at p in R^o:
// assemble(u0, v0, b) + assemble(u, v, b0) over all (b, u, v).
// dim F = n(M+1) - 1.
template <class T>
Subspace<T> tangent_frakC(const RParam<T>& p, T tol = T(0)) {
    const int n = p.n(), M = p.M();
    if (p.b.isZero(0) || p.u.isZero(0))
        throw std::invalid_argument("tangent_frakC: element not in R^o");
    const int P = n * (n - 1) / 2;
    std::vector<Vec<T>> gens;
    // b-variations with (u0, v0) fixed
    for (int g = 0; g < n; ++g) {
        RParam<T> q = p;
        q.b = Vec<T>::Zero(n);
        q.b(g) = T(1);
        gens.push_back(flatten(assemble(q)));
    }
    // u-variations along b0
    for (int m = 0; m < M; ++m) {
        RParam<T> q = RParam<T>::Zero(M, n);
        q.b = p.b;
        q.u(m) = T(1);
        gens.push_back(flatten(assemble(q)));
    }
    // v-variations along b0
    for (int pr = 0; pr < P; ++pr)
        for (int m = 0; m < M; ++m) {
            RParam<T> q = RParam<T>::Zero(M, n);
            q.b = p.b;
            q.v.data(m, pr) = T(1);
            Vec<T> f = flatten(assemble(q));
            if (!f.isZero(0)) gens.push_back(f);
        }
    Mat<T> g(2 * M * n, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) g.col(static_cast<int>(j)) = gens[j];
    return make_span(2 * M * n, g, tol);
}

}  // namespace tconfig
