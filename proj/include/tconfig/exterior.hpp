#pragma once

// R^M-valued exterior algebra on R^n: k-forms with vector coefficients,
// wedge with scalar 1-forms, Hodge star normalized so that
// dx^I ∧ ⋆dx^I = +dx^1∧...∧dx^n, and the linear bijection between
// (1-form, (n-1)-form) pairs and M x n matrix pairs.
//
// Multi-indices are bitmasks over {0,...,n-1}; within a fixed degree the
// numeric mask order coincides with lexicographic order on increasing
// tuples, which fixes serialization.

#include "tconfig/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace tconfig {

using Mask = std::uint32_t;

inline int mask_popcount(Mask m) { return __builtin_popcount(m); }

// sign of the permutation (A ascending, B ascending) of A ∪ B, for disjoint
// masks: (-1)^{#inversions}, inversions = pairs (a in A, b in B) with b < a.
inline int shuffle_sign(Mask a, Mask b) {
    int inversions = 0;
    for (Mask bits = a; bits; bits &= bits - 1) {
        int pos = __builtin_ctz(bits);
        inversions += mask_popcount(b & ((Mask(1) << pos) - 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

inline std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    for (Mask bits = m; bits; bits &= bits - 1) out.push_back(__builtin_ctz(bits));
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) {
        Mask bit = Mask(1) << i;
        if (m & bit) throw std::invalid_argument("repeated index in multi-index");
        m |= bit;
    }
    return m;
}

// ===== VForm ================================================================

template <class T>
struct VForm {
    int n = 0, M = 0, k = 0;
    std::map<Mask, Vec<T>> coeffs;  // only nonzero coefficients stored

    VForm() = default;
    VForm(int n_, int M_, int k_) : n(n_), M(M_), k(k_) {
        if (k < 0 || k > n) throw std::invalid_argument("degree out of range");
    }

    void add(Mask idx, const Vec<T>& v) {
        if (mask_popcount(idx) != k) throw std::invalid_argument("multi-index degree mismatch");
        if (idx >= (Mask(1) << n)) throw std::invalid_argument("multi-index out of range");
        auto it = coeffs.find(idx);
        if (it == coeffs.end()) {
            if (!v.isZero(0)) coeffs.emplace(idx, v);
        } else {
            it->second += v;
            if (it->second.isZero(0)) coeffs.erase(it);
        }
    }

    Vec<T> coeff(Mask idx) const {
        auto it = coeffs.find(idx);
        if (it != coeffs.end()) return it->second;
        return Vec<T>::Zero(M);
    }

    bool operator==(const VForm& o) const {
        if (n != o.n || M != o.M || k != o.k) return false;
        if (coeffs.size() != o.coeffs.size()) return false;
        auto it = coeffs.begin(), jt = o.coeffs.begin();
        for (; it != coeffs.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!(it->second - jt->second).isZero(0)) return false;
        }
        return true;
    }

    VForm operator+(const VForm& o) const {
        VForm r = *this;
        for (const auto& [idx, v] : o.coeffs) r.add(idx, v);
        return r;
    }

    VForm operator*(const T& s) const {
        VForm r(n, M, k);
        if (s == T(0)) return r;
        for (const auto& [idx, v] : coeffs) r.coeffs.emplace(idx, (v * s).eval());
        return r;
    }
};

template <class T>
VForm<T> hodge(const VForm<T>& f) {
    VForm<T> out(f.n, f.M, f.n - f.k);
    const Mask full = (Mask(1) << f.n) - 1;
    for (const auto& [idx, v] : f.coeffs) {
        Mask comp = full ^ idx;
        int c = shuffle_sign(idx, comp);
        out.add(comp, c > 0 ? v : Vec<T>(-v));
    }
    return out;
}

// (sum_a b_a dx^a) ∧ f
template <class T>
VForm<T> wedge1(const Vec<T>& b, const VForm<T>& f) {
    if (static_cast<int>(b.size()) != f.n) throw std::invalid_argument("wedge1: vector length != n");
    if (f.k > f.n - 1) throw std::invalid_argument("wedge1: degree too high");
    VForm<T> out(f.n, f.M, f.k + 1);
    for (int a = 0; a < f.n; ++a) {
        if (b(a) == T(0)) continue;
        Mask abit = Mask(1) << a;
        for (const auto& [idx, v] : f.coeffs) {
            if (idx & abit) continue;
            int sign = shuffle_sign(abit, idx);  // dx^a moved past the smaller indices of idx
            T factor = sign > 0 ? b(a) : T(-b(a));
            out.add(abit | idx, (v * factor).eval());
        }
    }
    return out;
}

// ===== PairPoint ============================================================

// A point Z = (X, Y) of the phase space under the matrix identification:
// X(i,a) is the dx^a coefficient of the 1-form block, Y(i,a) the ⋆dx^a
// coefficient of the (n-1)-form block.
template <class T>
struct PairPoint {
    Mat<T> X, Y;

    PairPoint() = default;
    PairPoint(const Mat<T>& x, const Mat<T>& y) : X(x), Y(y) {
        if (x.rows() != y.rows() || x.cols() != y.cols())
            throw std::invalid_argument("PairPoint blocks must share dimensions");
    }
    static PairPoint Zero(int M, int n) { return PairPoint(Mat<T>::Zero(M, n), Mat<T>::Zero(M, n)); }

    int M() const { return static_cast<int>(X.rows()); }
    int n() const { return static_cast<int>(X.cols()); }

    PairPoint operator+(const PairPoint& o) const { return PairPoint(X + o.X, Y + o.Y); }
    PairPoint operator-(const PairPoint& o) const { return PairPoint(X - o.X, Y - o.Y); }
    PairPoint operator*(const T& s) const { return PairPoint(X * s, Y * s); }
    PairPoint operator-() const { return PairPoint(-X, -Y); }
    bool operator==(const PairPoint& o) const {
        return (X - o.X).isZero(0) && (Y - o.Y).isZero(0);
    }
    bool is_zero() const { return X.isZero(0) && Y.isZero(0); }

    double norm() const {
        double s = 0;
        for (int i = 0; i < X.rows(); ++i)
            for (int j = 0; j < X.cols(); ++j) {
                double x = scalar_traits<T>::to_double(X(i, j)), y = scalar_traits<T>::to_double(Y(i, j));
                s += x * x + y * y;
            }
        return std::sqrt(s);
    }
};

template <class T>
PairPoint<T> operator*(const T& s, const PairPoint<T>& p) {
    return p * s;
}

// Flattening order: X row-major, then Y row-major.
template <class T>
Vec<T> flatten(const PairPoint<T>& p) {
    const int M = p.M(), n = p.n();
    Vec<T> v(2 * M * n);
    int k = 0;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < n; ++j) v(k++) = p.X(i, j);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < n; ++j) v(k++) = p.Y(i, j);
    return v;
}

template <class T>
PairPoint<T> unflatten(const Vec<T>& v, int M, int n) {
    if (v.size() != 2 * M * n) throw std::invalid_argument("unflatten: wrong length");
    PairPoint<T> p = PairPoint<T>::Zero(M, n);
    int k = 0;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < n; ++j) p.X(i, j) = v(k++);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < n; ++j) p.Y(i, j) = v(k++);
    return p;
}

// 𝔗: (1-form, (n-1)-form) -> matrix pair. Bijective; degrees enforced.
template <class T>
PairPoint<T> to_pair(const VForm<T>& w1, const VForm<T>& w2) {
    if (w1.k != 1) throw std::invalid_argument("to_pair: first form must have degree 1");
    if (w2.k != w2.n - 1) throw std::invalid_argument("to_pair: second form must have degree n-1");
    if (w1.n != w2.n || w1.M != w2.M) throw std::invalid_argument("to_pair: mismatched (M,n)");
    const int M = w1.M, n = w1.n;
    PairPoint<T> p = PairPoint<T>::Zero(M, n);
    for (int a = 0; a < n; ++a) {
        p.X.col(a) = w1.coeff(Mask(1) << a);
        // ⋆(dx^a ∧ w2) is a 0-form; its value is the ⋆dx^a coefficient of w2
        Vec<T> ea = Vec<T>::Zero(n);
        ea(a) = T(1);
        VForm<T> top = wedge1(ea, w2);
        p.Y.col(a) = top.coeff((Mask(1) << n) - 1);
    }
    return p;
}

template <class T>
std::pair<VForm<T>, VForm<T>> from_pair(const PairPoint<T>& p) {
    const int M = p.M(), n = p.n();
    VForm<T> w1(n, M, 1), w2(n, M, n - 1);
    const Mask full = (Mask(1) << n) - 1;
    for (int a = 0; a < n; ++a) {
        Mask abit = Mask(1) << a;
        if (!p.X.col(a).isZero(0)) w1.add(abit, p.X.col(a));
        // ⋆dx^a = c dx^{complement}
        Mask comp = full ^ abit;
        int c = shuffle_sign(abit, comp);
        Vec<T> v = p.Y.col(a);
        if (!v.isZero(0)) w2.add(comp, c > 0 ? v : Vec<T>(-v));
    }
    return {w1, w2};
}

}  // namespace tconfig
