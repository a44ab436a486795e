#pragma once

// Dense matrices over Rat or double, rank/nullspace/solve, subspace
// arithmetic, and the 2x2 rank-one determinant identities.
//
// Exact mode uses plain Gaussian elimination over Q (pivots are exact, no
// thresholds). Float mode delegates rank decisions to the SVD with a
// relative threshold tol * sigma_max.

#include "tconfig/scalar.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tconfig {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;
using MatD = Mat<double>;
using VecD = Vec<double>;

inline constexpr double kDefaultFloatTol = 1e-8;

namespace detail {

// Row echelon form in place; returns pivot columns. Exact pivoting for Rat,
// partial (max-abs) pivoting for double with threshold eps on the current
// column scale.
template <class T>
std::vector<int> row_echelon(Mat<T>& a, double eps = 0.0) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        if constexpr (scalar_traits<T>::is_exact) {
            for (int i = r; i < rows; ++i)
                if (a(i, c) != 0) { piv = i; break; }
        } else {
            double best = eps;
            for (int i = r; i < rows; ++i) {
                double v = scalar_traits<T>::abs(a(i, c));
                if (v > best) { best = v; piv = i; }
            }
        }
        if (piv < 0) continue;
        a.row(piv).swap(a.row(r));
        for (int i = r + 1; i < rows; ++i) {
            if (a(i, c) == T(0)) continue;
            T f = a(i, c) / a(r, c);
            a.row(i) -= f * a.row(r);
            a(i, c) = T(0);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class T>
int rank(const Mat<T>& m, T tol = T(0)) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("empty");
    if constexpr (scalar_traits<T>::is_exact) {
        scalar_traits<T>::check_tol(tol);
        Mat<T> a = m;
        return static_cast<int>(detail::row_echelon(a).size());
    } else {
        if (tol == 0) tol = kDefaultFloatTol;
        Eigen::JacobiSVD<MatD> svd(m);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0) return 0;
        double cut = tol * sv(0);
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cut) ++r;
        return r;
    }
}

// Basis of {v : m v = 0}; columns of the result span the kernel.
template <class T>
Mat<T> nullspace(const Mat<T>& m, T tol = T(0)) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("empty");
    const int cols = static_cast<int>(m.cols());
    if constexpr (scalar_traits<T>::is_exact) {
        scalar_traits<T>::check_tol(tol);
        Mat<T> a = m;
        std::vector<int> pivots = detail::row_echelon(a);
        // back substitution: reduce above pivots
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            int c = pivots[k];
            a.row(k) /= a(k, c);
            for (int i = 0; i < k; ++i) {
                if (a(i, c) == T(0)) continue;
                a.row(i) -= a(i, c) * a.row(k);
            }
        }
        std::vector<int> free_cols;
        {
            std::vector<bool> is_piv(cols, false);
            for (int c : pivots) is_piv[c] = true;
            for (int c = 0; c < cols; ++c)
                if (!is_piv[c]) free_cols.push_back(c);
        }
        Mat<T> basis = Mat<T>::Zero(cols, static_cast<int>(free_cols.size()));
        for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
            int fc = free_cols[j];
            basis(fc, j) = T(1);
            for (int k = 0; k < static_cast<int>(pivots.size()); ++k)
                basis(pivots[k], j) = -a(k, fc);
        }
        return basis;
    } else {
        if (tol == 0) tol = kDefaultFloatTol;
        Eigen::JacobiSVD<MatD> svd(m, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double cut = sv.size() ? tol * sv(0) : 0.0;
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cut) ++r;
        return svd.matrixV().rightCols(cols - r);
    }
}

// Unique solution of a x = b when it exists (least-norm consistency check in
// exact mode; float mode uses a rank-revealing QR).
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b, T tol = T(0)) {
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    if constexpr (scalar_traits<T>::is_exact) {
        scalar_traits<T>::check_tol(tol);
        Mat<T> aug(rows, cols + 1);
        aug.leftCols(cols) = a;
        aug.col(cols) = b;
        std::vector<int> pivots = detail::row_echelon(aug);
        if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            int c = pivots[k];
            aug.row(k) /= aug(k, c);
            for (int i = 0; i < k; ++i) aug.row(i) -= aug(i, c) * aug.row(k);
        }
        Vec<T> x = Vec<T>::Zero(cols);
        for (int k = 0; k < static_cast<int>(pivots.size()); ++k) x(pivots[k]) = aug(k, cols);
        return x;
    } else {
        Eigen::ColPivHouseholderQR<MatD> qr(a);
        VecD x = qr.solve(b);
        double resid = (a * x - b).norm();
        double scale = b.norm() + 1.0;
        if (resid > (tol == 0 ? kDefaultFloatTol : tol) * scale * 100) return std::nullopt;
        return x;
    }
}

template <class T>
T det(const Mat<T>& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("det: square matrix required");
    if constexpr (scalar_traits<T>::is_exact) {
        Mat<T> a = m;
        const int n = static_cast<int>(a.rows());
        T d(1);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = c; i < n; ++i)
                if (a(i, c) != 0) { piv = i; break; }
            if (piv < 0) return T(0);
            if (piv != c) {
                a.row(piv).swap(a.row(c));
                d = -d;
            }
            d *= a(c, c);
            for (int i = c + 1; i < n; ++i) {
                if (a(i, c) == T(0)) continue;
                T f = a(i, c) / a(c, c);
                a.row(i) -= f * a.row(c);
            }
        }
        return d;
    } else {
        return m.determinant();
    }
}

// ===== Subspaces ============================================================

// A subspace of R^ambient, stored as an explicit (independent) basis.
template <class T>
struct Subspace {
    int ambient = 0;
    Mat<T> basis;  // ambient x dim, columns independent

    int dim() const { return static_cast<int>(basis.cols()); }
};

// Compress a generating set (columns) to an independent basis.
template <class T>
Subspace<T> make_span(int ambient, const Mat<T>& gens, T tol = T(0)) {
    Subspace<T> s;
    s.ambient = ambient;
    if (gens.cols() == 0) {
        s.basis = Mat<T>::Zero(ambient, 0);
        return s;
    }
    if (gens.rows() != ambient) throw std::invalid_argument("ambient mismatch");
    // pivot columns of the echelon form index an independent subset
    Mat<T> a = gens;
    std::vector<int> pivots;
    if constexpr (scalar_traits<T>::is_exact) {
        pivots = detail::row_echelon(a);
    } else {
        // column-pivoted QR picks a well-conditioned subset
        if (tol == T(0)) tol = kDefaultFloatTol;
        Eigen::ColPivHouseholderQR<MatD> qr(gens);
        qr.setThreshold(tol);
        int r = static_cast<int>(qr.rank());
        for (int i = 0; i < r; ++i) pivots.push_back(static_cast<int>(qr.colsPermutation().indices()(i)));
    }
    // row_echelon gives pivot COLUMN indices directly in exact mode
    s.basis = Mat<T>(ambient, static_cast<int>(pivots.size()));
    for (int j = 0; j < static_cast<int>(pivots.size()); ++j) s.basis.col(j) = gens.col(pivots[j]);
    return s;
}

template <class T>
int subspace_sum_dim(const Subspace<T>& a, const Subspace<T>& b, T tol = T(0)) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    if (a.dim() == 0 && b.dim() == 0) return 0;
    Mat<T> stacked(a.ambient, a.dim() + b.dim());
    if (a.dim()) stacked.leftCols(a.dim()) = a.basis;
    if (b.dim()) stacked.rightCols(b.dim()) = b.basis;
    return rank(stacked, tol);
}

// Basis of a ∩ b via the kernel of [Ba | -Bb].
template <class T>
Subspace<T> subspace_intersection(const Subspace<T>& a, const Subspace<T>& b, T tol = T(0)) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    Subspace<T> out;
    out.ambient = a.ambient;
    if (a.dim() == 0 || b.dim() == 0) {
        out.basis = Mat<T>::Zero(a.ambient, 0);
        return out;
    }
    Mat<T> stacked(a.ambient, a.dim() + b.dim());
    stacked.leftCols(a.dim()) = a.basis;
    stacked.rightCols(b.dim()) = -b.basis;
    Mat<T> ker = nullspace(stacked, tol);
    Mat<T> gens = a.basis * ker.topRows(a.dim());
    return make_span(a.ambient, gens, tol);
}

// ===== 2x2 rank-one determinant identities ==================================

template <class T>
Vec<T> perp2(const Vec<T>& v) {
    if (v.size() != 2) throw std::invalid_argument("perp2: length-2 vector required");
    Vec<T> w(2);
    w << -v(1), v(0);
    return w;
}

template <class T>
struct Det2Rank1 {
    T det_plus;     // det(a⊗b + c⊗d), direct
    T det_minus;    // det(a⊗b - c⊗d), direct
    T closed_form;  // <a^perp, c> <b^perp, d>
};

// The closed form agrees with the "+" expansion: det(a⊗b + c⊗d) equals
// <a^perp,c><b^perp,d>, and det(a⊗b - c⊗d) is its negative.
template <class T>
Det2Rank1<T> det2_rank1_pair(const Vec<T>& a, const Vec<T>& b, const Vec<T>& c, const Vec<T>& d) {
    if (a.size() != 2 || b.size() != 2 || c.size() != 2 || d.size() != 2)
        throw std::invalid_argument("det2_rank1_pair: length-2 vectors required");
    Mat<T> plus = a * b.transpose() + c * d.transpose();
    Mat<T> minus = a * b.transpose() - c * d.transpose();
    Det2Rank1<T> r;
    r.det_plus = det(plus);
    r.det_minus = det(minus);
    r.closed_form = perp2(a).dot(c) * perp2(b).dot(d);
    return r;
}

template <class T>
Mat<T> matJ() {
    Mat<T> j(2, 2);
    j << T(0), T(-1), T(1), T(0);
    return j;
}

// (a ⊗ b) J; satisfies (a⊗b)J == -a⊗b^perp identically.
template <class T>
Mat<T> times_J(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("times_J: length-2 vectors required");
    return (a * b.transpose()) * matJ<T>();
}

}  // namespace tconfig
