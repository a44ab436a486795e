#pragma once

// Minors vectors, the strict inequality systems behind K_F-membership, the
// max-of-affine convex factor G and the assembled energy F, membership
// checks, the 2x2 -> (M,n) lift, the rank-one splitting with sqrt(delta)
// asymptotics, and the T_N -> T_{N+2} extension.

#include "tconfig/laminate.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace tconfig {

// ===== minors ===============================================================

struct MinorIndex {
    int k;
    std::vector<int> I;  // rows, ascending, 0-based
    std::vector<int> A;  // cols, ascending, 0-based

    bool operator<(const MinorIndex& o) const {
        return std::tie(k, I, A) < std::tie(o.k, o.I, o.A);
    }
    bool operator==(const MinorIndex& o) const { return k == o.k && I == o.I && A == o.A; }
};

// Enumeration order: k ascending, row set lexicographic, column set
// lexicographic. The k = 1 block is the flattened matrix (row-major).
std::vector<MinorIndex> minor_indices(int M, int n);

inline int minors_length(int M, int n) { return static_cast<int>(minor_indices(M, n).size()); }

namespace detail {

inline void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}

template <class T>
Mat<T> submatrix(const Mat<T>& X, const std::vector<int>& I, const std::vector<int>& A) {
    Mat<T> s(static_cast<int>(I.size()), static_cast<int>(A.size()));
    for (size_t r = 0; r < I.size(); ++r)
        for (size_t c = 0; c < A.size(); ++c) s(static_cast<int>(r), static_cast<int>(c)) = X(I[r], A[c]);
    return s;
}

}  // namespace detail

template <class T>
struct MinorsVec {
    std::vector<MinorIndex> index;
    Vec<T> values;
};

template <class T>
MinorsVec<T> minors(const Mat<T>& X) {
    MinorsVec<T> out;
    out.index = minor_indices(static_cast<int>(X.rows()), static_cast<int>(X.cols()));
    out.values = Vec<T>(static_cast<int>(out.index.size()));
    for (size_t i = 0; i < out.index.size(); ++i) {
        const MinorIndex& mi = out.index[i];
        if (mi.k == 1)
            out.values(static_cast<int>(i)) = X(mi.I[0], mi.A[0]);
        else
            out.values(static_cast<int>(i)) = det(detail::submatrix(X, mi.I, mi.A).eval());
    }
    return out;
}

// Gradient of det(X_{I,A}) with respect to X: the cofactor matrix of the
// submatrix scattered into the (I, A) slots.
template <class T>
Mat<T> minors_grad(const Mat<T>& X, const MinorIndex& mi) {
    const int M = static_cast<int>(X.rows()), n = static_cast<int>(X.cols());
    for (int r : mi.I)
        if (r < 0 || r >= M) throw std::invalid_argument("minors_grad: bad row set");
    for (int c : mi.A)
        if (c < 0 || c >= n) throw std::invalid_argument("minors_grad: bad column set");
    Mat<T> g = Mat<T>::Zero(M, n);
    const int k = mi.k;
    Mat<T> sub = detail::submatrix(X, mi.I, mi.A);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (k == 1) {
                g(mi.I[0], mi.A[0]) = T(1);
                continue;
            }
            Mat<T> minor(k - 1, k - 1);
            for (int rr = 0, ri = 0; rr < k; ++rr) {
                if (rr == r) continue;
                for (int cc = 0, ci = 0; cc < k; ++cc) {
                    if (cc == c) continue;
                    minor(ri, ci) = sub(rr, cc);
                    ++ci;
                }
                ++ri;
            }
            T cof = det(minor);
            if ((r + c) % 2 == 1) cof = -cof;
            g(mi.I[r], mi.A[c]) = cof;
        }
    return g;
}

// ===== inequality systems ===================================================

enum class IneqForm {
    General,  // eq:linearsystemass anchored at X_i (d-coefficients on k >= 2 minors)
    App2d,    // printed 2-D appendix convention with Y J
    App3d,    // printed 3-D appendix convention (auto-detected variant)
};

template <class T>
struct IneqReport {
    Mat<T> values;       // N x N, zero diagonal
    bool all_negative = false;
    T margin = T(0);     // min over off-diagonal of -value (positive iff all negative)
    std::string convention;
};

// d-coefficients of the general form: per endpoint a sparse set of k >= 2
// minors.
template <class T>
using DCoeffs = std::map<MinorIndex, T>;

// General form: value(i,j) = c_i - c_j + <Yhat_i, X_j - X_i>
//   + delta * sum d_{k,I,A} [ det(X_j|IA) - det(X_i|IA) - <grad det at X_i, X_j - X_i> ].
template <class T>
IneqReport<T> check_ineq_general(const std::vector<Mat<T>>& X, const std::vector<Mat<T>>& Yhat,
                                 const std::vector<T>& c, const std::vector<DCoeffs<T>>& d,
                                 const T& delta = T(1)) {
    const int N = static_cast<int>(X.size());
    IneqReport<T> rep;
    rep.convention = "general (anchored at X_i)";
    rep.values = Mat<T>::Zero(N, N);
    rep.all_negative = true;
    bool first = true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            Mat<T> D = X[j] - X[i];
            T v = c[i] - c[j] + (Yhat[i].cwiseProduct(D)).sum();
            for (const auto& [mi, coef] : d[i]) {
                T mj = det(detail::submatrix(X[j], mi.I, mi.A).eval());
                T mii = det(detail::submatrix(X[i], mi.I, mi.A).eval());
                T corr = (minors_grad(X[i], mi).cwiseProduct(D)).sum();
                v += delta * coef * (mj - mii - corr);
            }
            rep.values(i, j) = v;
            if (!(v < T(0))) rep.all_negative = false;
            if (first || -v < rep.margin) {
                rep.margin = -v;
                first = false;
            }
        }
    return rep;
}

// Printed 2-D convention: value(i,j) = c_i - c_j + d_i det(X_i - X_j)
//   + <X_i - X_j, Y_i J>, with Y_i the printed (canonical) 2x2 blocks.
template <class T>
IneqReport<T> check_ineq_app2d(const std::vector<Mat<T>>& X, const std::vector<Mat<T>>& Y,
                               const std::vector<T>& c, const std::vector<T>& d) {
    const int N = static_cast<int>(X.size());
    IneqReport<T> rep;
    rep.convention = "app2d (printed): c_i - c_j + d_i det(X_i-X_j) + <X_i-X_j, Y_i J>";
    rep.values = Mat<T>::Zero(N, N);
    rep.all_negative = true;
    Mat<T> J = matJ<T>();
    bool first = true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            Mat<T> D = X[i] - X[j];
            T v = c[i] - c[j] + d[i] * det(D) + (D.cwiseProduct((Y[i] * J).eval())).sum();
            rep.values(i, j) = v;
            if (!(v < T(0))) rep.all_negative = false;
            if (first || -v < rep.margin) {
                rep.margin = -v;
                first = false;
            }
        }
    return rep;
}

// 3-D appendix form: value(i,j) = c_i - c_j + sy <Y_i, X_j - X_i>
//   + sum_{k,l} d_{i,kl} minor_del(X_j - X_i; k, l)  [optional cofactor sign]
//   + m_i (det X_j - det X_i - <grad det at E, X_j - X_i>),  E in {X_i, X_j}.
struct App3dConvention {
    int y_sign = -1;           // the 2-D appendix orientation <Y_i, X_i - X_j>
    bool cofactor_sign = false;
    bool transpose_dl = false;  // (k,l) -> (l,k) in the d-matrix
    bool grad_at_Xj = false;    // evaluation point of the det gradient
    int m_sign = 1;

    std::string describe() const {
        std::ostringstream os;
        os << "app3d: Y-term " << (y_sign > 0 ? "<Y_i, X_j-X_i>" : "<Y_i, X_i-X_j>")
           << ", minors delete-(k,l) " << (transpose_dl ? "transposed" : "row-major")
           << (cofactor_sign ? " with cofactor sign" : " unsigned") << ", det gradient at "
           << (grad_at_Xj ? "X_j" : "X_i") << ", m-sign " << m_sign;
        return os.str();
    }
};

template <class T>
T minor_delete(const Mat<T>& D, int k, int l) {
    std::vector<int> rs, cs;
    for (int r = 0; r < 3; ++r)
        if (r != k) rs.push_back(r);
    for (int c = 0; c < 3; ++c)
        if (c != l) cs.push_back(c);
    return D(rs[0], cs[0]) * D(rs[1], cs[1]) - D(rs[0], cs[1]) * D(rs[1], cs[0]);
}

template <class T>
IneqReport<T> check_ineq_app3d(const std::vector<Mat<T>>& X, const std::vector<Mat<T>>& Y,
                               const std::vector<T>& c, const std::vector<std::array<T, 9>>& d,
                               const std::vector<T>& m, const App3dConvention& conv) {
    const int N = static_cast<int>(X.size());
    IneqReport<T> rep;
    rep.convention = conv.describe();
    rep.values = Mat<T>::Zero(N, N);
    rep.all_negative = true;
    bool first = true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            Mat<T> D = X[j] - X[i];
            T v = c[i] - c[j] + T(conv.y_sign) * (Y[i].cwiseProduct(D)).sum();
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    int kk = conv.transpose_dl ? l : k;
                    int ll = conv.transpose_dl ? k : l;
                    T coef = d[i][3 * k + l];
                    if (conv.cofactor_sign && (kk + ll) % 2 == 1) coef = -coef;
                    v += coef * minor_delete(D, kk, ll);
                }
            const Mat<T>& E = conv.grad_at_Xj ? X[j] : X[i];
            MinorIndex full{3, {0, 1, 2}, {0, 1, 2}};
            T rem = det(X[j]) - det(X[i]) - (minors_grad(E, full).cwiseProduct(D)).sum();
            v += T(conv.m_sign) * m[i] * rem;
            rep.values(i, j) = v;
            if (!(v < T(0))) rep.all_negative = false;
            if (first || -v < rep.margin) {
                rep.margin = -v;
                first = false;
            }
        }
    return rep;
}

// Auto-detection over the natural convention family; returns the first
// all-negative convention, if any, plus per-convention margins.
template <class T>
struct App3dDetection {
    std::optional<App3dConvention> detected;
    IneqReport<T> best_report;  // report of the detected convention, or the least-violating one
    int conventions_tried = 0;
};

template <class T>
App3dDetection<T> detect_app3d(const std::vector<Mat<T>>& X, const std::vector<Mat<T>>& Y,
                               const std::vector<T>& c, const std::vector<std::array<T, 9>>& d,
                               const std::vector<T>& m) {
    App3dDetection<T> out;
    bool have_best = false;
    for (int ys : {-1, 1})
        for (bool cof : {false, true})
            for (bool tr : {false, true})
                for (bool gj : {false, true})
                    for (int ms : {1, -1}) {
                        App3dConvention conv{ys, cof, tr, gj, ms};
                        IneqReport<T> rep = check_ineq_app3d(X, Y, c, d, m, conv);
                        ++out.conventions_tried;
                        if (rep.all_negative) {
                            out.detected = conv;
                            out.best_report = rep;
                            return out;
                        }
                        if (!have_best || rep.margin > out.best_report.margin) {
                            out.best_report = rep;
                            have_best = true;
                        }
                    }
    return out;
}

// ===== PolyF ================================================================

// F(X) = epsilon/2 |X|^2 + delta G(minors(X)), G a max of affine pieces.
template <class T>
struct PolyF {
    T epsilon, delta;
    struct Piece {
        T c;
        Vec<T> B;       // gradient in minors space, length L
        Vec<T> anchor;  // minors vector of the anchor point
    };
    std::vector<Piece> pieces;
    int M = 0, n = 0;

    T G(const Vec<T>& xt) const {
        T best = pieces[0].c + pieces[0].B.dot(xt - pieces[0].anchor);
        for (size_t i = 1; i < pieces.size(); ++i) {
            T v = pieces[i].c + pieces[i].B.dot(xt - pieces[i].anchor);
            if (v > best) best = v;
        }
        return best;
    }

    std::vector<int> active_pieces(const Vec<T>& xt) const {
        T best = G(xt);
        std::vector<int> act;
        for (size_t i = 0; i < pieces.size(); ++i) {
            T v = pieces[i].c + pieces[i].B.dot(xt - pieces[i].anchor);
            if (v == best) act.push_back(static_cast<int>(i));
        }
        return act;
    }

    T value(const Mat<T>& X) const {
        T sq(0);
        for (int i = 0; i < X.rows(); ++i)
            for (int j = 0; j < X.cols(); ++j) sq += X(i, j) * X(i, j);
        return epsilon / T(2) * sq + delta * G(minors(X).values);
    }

    // DF at a point with a unique active piece of G.
    Mat<T> gradient(const Mat<T>& X) const {
        Vec<T> xt = minors(X).values;
        std::vector<int> act = active_pieces(xt);
        if (act.size() != 1) throw std::runtime_error("kink at anchor");
        const Piece& p = pieces[act[0]];
        Mat<T> g = X * epsilon;
        std::vector<MinorIndex> idx = minor_indices(M, n);
        for (size_t q = 0; q < idx.size(); ++q) {
            if (p.B(static_cast<int>(q)) == T(0)) continue;
            g += delta * p.B(static_cast<int>(q)) * minors_grad(X, idx[q]);
        }
        return g;
    }
};

// Max-of-affine G through the anchors; requires the strict support
// inequalities eq:Sz04:cjci, which also make the active piece at every
// anchor unique.
template <class T>
PolyF<T> build_G(const std::vector<Vec<T>>& anchors, const std::vector<T>& c,
                 const std::vector<Vec<T>>& B, int M, int n, const T& epsilon, const T& delta) {
    const int N = static_cast<int>(anchors.size());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            if (!(c[j] > c[i] + B[i].dot(anchors[j] - anchors[i])))
                throw std::invalid_argument("build_G: support inequalities c_j > c_i + <B_i, X~_j - X~_i> fail at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    PolyF<T> F;
    F.epsilon = epsilon;
    F.delta = delta;
    F.M = M;
    F.n = n;
    for (int i = 0; i < N; ++i) F.pieces.push_back({c[i], B[i], anchors[i]});
    return F;
}

// delta d1^i := Yhat_i - epsilon X_i - F0grad_i - delta sum_{k>=2} d grad;
// returns the full B_i vectors in minors space.
template <class T>
std::vector<Vec<T>> solve_d0(const std::vector<Mat<T>>& X, const std::vector<Mat<T>>& Yhat,
                             const std::vector<DCoeffs<T>>& d, const T& epsilon, const T& delta,
                             const std::vector<Mat<T>>& F0grad = {}) {
    if (delta == T(0)) throw std::invalid_argument("solve_d0: delta must be nonzero");
    const int N = static_cast<int>(X.size());
    const int M = static_cast<int>(X[0].rows()), n = static_cast<int>(X[0].cols());
    std::vector<MinorIndex> idx = minor_indices(M, n);
    std::vector<Vec<T>> out;
    for (int i = 0; i < N; ++i) {
        Mat<T> d1 = Yhat[i] - epsilon * X[i];
        if (!F0grad.empty()) d1 -= F0grad[i];
        for (const auto& [mi, coef] : d[i]) d1 -= delta * coef * minors_grad(X[i], mi);
        d1 /= delta;
        Vec<T> B = Vec<T>::Zero(static_cast<int>(idx.size()));
        for (size_t q = 0; q < idx.size(); ++q) {
            const MinorIndex& mi = idx[q];
            if (mi.k == 1) {
                B(static_cast<int>(q)) = d1(mi.I[0], mi.A[0]);
            } else {
                auto it = d[i].find(mi);
                if (it != d[i].end()) B(static_cast<int>(q)) = it->second;
            }
        }
        out.push_back(B);
    }
    return out;
}

// ===== K_F membership =======================================================

template <class T>
struct KFReport {
    bool pass = false;
    std::vector<bool> endpoint_pass;
    // sign s with Y(canonical 2x2) == s * (-Yhat J): +1 is the Y = -DF(X) J
    // identification, -1 the appendix-dataset orientation; 0 when n != 2 or
    // undetermined
    int convention_sign = 0;
    std::string note;
};

// hat -> canonical conversion for n = 2 (star on 1-forms): Y_can = -Yhat J.
template <class T>
Mat<T> canonical_y_from_hat(const Mat<T>& yhat) {
    if (yhat.cols() != 2) throw std::invalid_argument("canonical_y_from_hat: n = 2 only");
    return -(yhat * matJ<T>());
}

// Membership of endpoints in K_F: the internal Y-blocks are hat coordinates,
// so membership is DF(X_i) == Y_i directly; requires a unique active piece
// of G at every anchor.
template <class T>
KFReport<T> check_KF(const std::vector<PairPoint<T>>& Z, const PolyF<T>& F, T tol = T(0)) {
    KFReport<T> rep;
    rep.pass = true;
    for (const auto& z : Z) {
        Mat<T> df = F.gradient(z.X);  // throws "kink at anchor" when not unique
        bool ok;
        if constexpr (scalar_traits<T>::is_exact) {
            ok = (df - z.Y).isZero(0);
        } else {
            double t = (tol == T(0)) ? kDefaultFloatTol : tol;
            ok = (df - z.Y).norm() <= t * (1.0 + z.Y.norm());
        }
        rep.endpoint_pass.push_back(ok);
        if (!ok) rep.pass = false;
    }
    if (!Z.empty() && Z[0].n() == 2) rep.convention_sign = 1;
    rep.note = "internal Y-blocks are hat coordinates; membership is DF(X) == Y";
    return rep;
}

// ===== Legendre-Hadamard grid estimate ======================================

struct LHEstimate {
    double lower_bound = 0;
    VecD xi, eta;
    int grid = 0;
};

// min over sampled unit xi, eta of the biquadratic form <xi (x) eta,
// H [xi (x) eta]>, with one local refinement pass. A grid estimate, not a
// certificate.
LHEstimate check_LH(const MatD& H, int M, int n, int grid = 64, std::uint64_t seed = 1);

// ===== lift =================================================================

// A 2x2 seed configuration in Sz04 coordinates: steps C_i = (a'_i ; a''_i)
// (x) b_i with the canonical identification of both blocks.
template <class T>
struct Seed2x2 {
    std::vector<Vec<T>> aprime;  // R^2
    std::vector<Vec<T>> app;     // R^2 (Y-block factors)
    std::vector<Vec<T>> b;       // R^2 directions (unnormalized allowed)
    std::vector<T> kappas;

    int N() const { return static_cast<int>(aprime.size()); }
};

// Zero-extension lift of a 2x2 configuration into (M, n): b = (b, 0),
// u = (a', 0), v_{12} = (a'', 0). The internal hat Y-block of each lifted
// step equals the canonical 2-D Y-block times J, padded by zeros.
template <class T>
TNConfig<T> lift(const Seed2x2<T>& seed, int M, int n) {
    if (M < 2 || n < 2) throw std::invalid_argument("lift: M, n >= 2 required");
    TNConfig<T> c;
    c.P = PairPoint<T>::Zero(M, n);
    for (int i = 0; i < seed.N(); ++i) {
        RParam<T> p = RParam<T>::Zero(M, n);
        p.b.head(2) = seed.b[i];
        p.u.head(2) = seed.aprime[i];
        Vec<T> vv = Vec<T>::Zero(M);
        vv.head(2) = seed.app[i];
        p.v.set(0, 1, vv);
        c.steps.push_back(p);
        c.kappas.push_back(seed.kappas[i]);
    }
    if (!c.step_sum().is_zero()) throw std::invalid_argument("lift: seed steps do not sum to zero");
    return c;
}

// ===== rank-one splitting ===================================================

template <class T>
struct RankOneSplit {
    RParam<T> C1, C2;
    Vec<T> p;       // component of bbar orthogonal to b
    T eta1, eta2;   // b = eta1 b1~ + eta2 b2~  (exactly lambda, 1 - lambda)
    T mu1, mu2;     // delta(bbar + delta^2 xi) = mu1 b1~ + mu2 b2~
};

// Exact decomposition delta Cbar_delta + C = C1~ + C2~ along
// b1~ = b + sqrt(delta) w, b2~ = b + sigma w, sigma = -sqrt(delta)
// lambda/(1-lambda), w = p + delta^2 (xi - <xi,b>b/|b|^2). Exact whenever
// sqrt(delta) is rational; unnormalized b throughout.
template <class T>
RankOneSplit<T> rank_one_split(const RParam<T>& C, const Vec<T>& abar_u, const SoN<T>& abar_v,
                               const Vec<T>& bbar, const Vec<T>& xi, const T& lambda, const T& delta) {
    const int n = C.n();
    RankOneSplit<T> out;
    T bb = C.b.dot(C.b);
    out.p = bbar - (bbar.dot(C.b) / bb) * C.b;
    if (out.p.isZero(0)) throw std::invalid_argument("p = 0");
    if (!(lambda > T(0)) || !(lambda < T(1)))
        throw std::invalid_argument("rank_one_split: lambda outside (0,1)");
    T s;
    if constexpr (scalar_traits<T>::is_exact) {
        auto sq = exact_sqrt(delta);
        if (!sq) throw std::invalid_argument("rank_one_split: sqrt(delta) must be rational in exact mode");
        s = *sq;
    } else {
        s = std::sqrt(delta);
    }
    T sigma = -s * lambda / (T(1) - lambda);
    Vec<T> w = out.p + delta * delta * (xi - (xi.dot(C.b) / bb) * C.b);
    Vec<T> b1 = C.b + s * w;
    Vec<T> b2 = C.b + sigma * w;
    // b = eta1 b1 + eta2 b2 and delta(bbar + delta^2 xi) = mu1 b1 + mu2 b2:
    // solve in the (b, w) coordinates; both RHS lie in span{b, w}
    out.eta1 = sigma / (sigma - s);
    out.eta2 = -s / (sigma - s);
    T cb = (bbar.dot(C.b) + delta * delta * xi.dot(C.b)) / bb;
    // delta(cb b + w) = mu1 (b + s w) + mu2 (b + sigma w)
    out.mu1 = delta * (T(1) - sigma * cb) / (s - sigma);
    out.mu2 = delta * (s * cb - T(1)) / (s - sigma);
    out.C1 = RParam<T>(b1, (out.mu1 * abar_u + out.eta1 * C.u).eval(),
                       abar_v * out.mu1 + C.v * out.eta1);
    out.C2 = RParam<T>(b2, (out.mu2 * abar_u + out.eta2 * C.u).eval(),
                       abar_v * out.mu2 + C.v * out.eta2);
    return out;
}

// ===== extension direction and conditions ===================================

template <class T>
struct Direction {
    Vec<T> abar_u;  // abar' in R^M (zero in the default 0-limit choice)
    SoN<T> abar_v;  // abar'' as an antisymmetric array
    Vec<T> bbar;    // R^n, unnormalized
};

// The two strict inequalities of the extension criterion, evaluated exactly
// in homogeneous (unnormalized) form. pass iff lhs1 > rhs1 and lhs2 < rhs2.
template <class T>
struct ExtensionConditions {
    T lhs1, rhs1, lhs2, rhs2;
    bool pass = false;
};

template <class T>
ExtensionConditions<T> check_extension_conditions(const TNConfig<T>& c, int i1, int i2,
                                                  const Direction<T>& dir,
                                                  const std::vector<T>& dcoef) {
    const int n = c.n();
    ExtensionConditions<T> out;
    auto side = [&](int idx, T& lhs, T& rhs) {
        const RParam<T>& st = c.steps[idx];
        T bb = st.b.dot(st.b);
        Vec<T> p = dir.bbar - (dir.bbar.dot(st.b) / bb) * st.b;
        if (p.isZero(0)) throw std::invalid_argument("check_extension_conditions: bbar parallel to b");
        T bp = dir.bbar.dot(p) / p.dot(p);
        // sum over (alpha, beta) of (<a''_ab, abar'> - <abar''_ab, a'>) p_b b_a
        T sum(0);
        for (int a = 0; a < n; ++a)
            for (int b2 = 0; b2 < n; ++b2) {
                T w = p(b2) * st.b(a);
                if (w == T(0)) continue;
                sum += (st.v.get(a, b2).dot(dir.abar_u) - dir.abar_v.get(a, b2).dot(st.u)) * w;
            }
        lhs = bp * sum;
        // -2 d^i <bbar, p/|p|^2> <(a')perp, abar'> <(p)perp, b> on the 2-D
        // restrictions
        Vec<T> a2 = st.u.head(2), ab2 = dir.abar_u.head(2), p2 = p.head(2), b2v = st.b.head(2);
        rhs = -T(2) * dcoef[idx] * bp * perp2<T>(a2).dot(ab2) * perp2<T>(p2).dot(b2v);
    };
    side(i1 - 1, out.lhs1, out.rhs1);
    side(i2 - 1, out.lhs2, out.rhs2);
    out.pass = (out.lhs1 > out.rhs1) && (out.lhs2 < out.rhs2);
    return out;
}

// The recipe behind the extension criterion: bbar along b1^perp + b2^perp
// (2-D parts, zero-extended) and abar'' close to -a'_1/|a'_1| + a'_2/|a'_2|
// with rational norm approximations; abar' = 0 (the 0-limit default).
// Verified by check_extension_conditions with the configured d-coefficients.
template <class T>
Direction<T> choose_direction(const TNConfig<T>& c, int i1, int i2, const std::vector<T>& dcoef) {
    const int M = c.M(), n = c.n();
    const RParam<T>&s1 = c.steps[i1 - 1], &s2 = c.steps[i2 - 1];
    Vec<T> b1 = s1.b.head(2), b2 = s2.b.head(2);
    Mat<T> bmat(2, 2);
    bmat.col(0) = b1;
    bmat.col(1) = b2;
    if (rank(bmat) < 2) throw std::invalid_argument("choose_direction: b_{i1}, b_{i2} dependent");
    if (b1.dot(b2) == T(0)) throw std::invalid_argument("choose_direction: b_{i1}, b_{i2} orthogonal");
    Vec<T> a1 = s1.u.head(2), a2 = s2.u.head(2);
    Mat<T> amat(2, 2);
    amat.col(0) = a1;
    amat.col(1) = a2;
    if (rank(amat) < 2) throw std::invalid_argument("choose_direction: a'_{i1}, a'_{i2} dependent");

    Direction<T> dir;
    dir.bbar = Vec<T>::Zero(n);
    dir.bbar.head(2) = perp2<T>(b1) + perp2<T>(b2);
    dir.abar_v = SoN<T>(n, M);
    T r1, r2;
    if constexpr (scalar_traits<T>::is_exact) {
        r1 = rat_approx(1.0 / std::sqrt(scalar_traits<T>::to_double(a1.dot(a1))), 100000);
        r2 = rat_approx(1.0 / std::sqrt(scalar_traits<T>::to_double(a2.dot(a2))), 100000);
    } else {
        r1 = 1.0 / std::sqrt(a1.dot(a1));
        r2 = 1.0 / std::sqrt(a2.dot(a2));
    }
    Vec<T> app = Vec<T>::Zero(M);
    app.head(2) = -r1 * a1 + r2 * a2;
    dir.abar_v.set(0, 1, app);
    // abar' must be nonzero (a small multiple keeps the strict criterion)
    // or the split produces parallel neighbor a'-blocks; take a direction
    // independent of both a'_{i1} and a'_{i2} and shrink until the strict
    // inequalities hold
    Vec<T> w = Vec<T>::Zero(M);
    w.head(2) = perp2<T>(a1);
    {
        Mat<T> wm(2, 2);
        wm.col(0) = w.head(2);
        wm.col(1) = a2;
        if (rank(wm, T(0)) < 2) w.head(2) = perp2<T>(Vec<T>(a1 + a2));
    }
    T t = T(1) / T(64);
    for (int halvings = 0; halvings < 40; ++halvings, t /= T(2)) {
        dir.abar_u = t * w;
        if (check_extension_conditions(c, i1, i2, dir, dcoef).pass) return dir;
        dir.abar_v.set(0, 1, (-app).eval());
        if (check_extension_conditions(c, i1, i2, dir, dcoef).pass) return dir;
        dir.abar_v.set(0, 1, app);
    }
    throw std::invalid_argument("choose_direction: extension criterion fails both orientations");
}

// ===== the T_N -> T_{N+2} extension =========================================

template <class T>
struct ExtendedConfig {
    TNConfig<T> config;
    std::vector<T> c;  // updated certificate
    std::vector<T> d;  // per-step top-left 2x2 minor coefficients
    T delta_used;
    T margin;          // strict-negativity margin of the new system
};

// Internal Sz04-form system for a (possibly lifted) configuration:
// value(i,j) = c_i - c_j + <Yhat_i, X_j - X_i> + d_i det2(top-left of X_j - X_i).
template <class T>
IneqReport<T> check_ineq_szform(const TNConfig<T>& c, const std::vector<T>& cs,
                                const std::vector<T>& ds) {
    std::vector<Mat<T>> X, Yhat;
    for (int k = 1; k <= c.N(); ++k) {
        PairPoint<T> z = endpoint(c, k);
        X.push_back(z.X);
        Yhat.push_back(z.Y);
    }
    std::vector<DCoeffs<T>> d(c.N());
    MinorIndex tl{2, {0, 1}, {0, 1}};
    for (int i = 0; i < c.N(); ++i) d[i][tl] = ds[i];
    IneqReport<T> rep = check_ineq_general<T>(X, Yhat, cs, d, T(1));
    rep.convention = "Sz04 form: c_i - c_j + <Yhat_i, X_j-X_i> + d_i det2(topleft(X_j-X_i))";
    return rep;
}

template <class T>
ExtendedConfig<T> extend(const TNConfig<T>& c, int i1, int i2, const std::vector<T>& cs,
                         const std::vector<T>& ds, const Direction<T>& dir, const Vec<T>& xi,
                         int max_bisect = 24, T tol = T(0)) {
    if (!(i1 < i2)) throw std::invalid_argument("extend: need i1 < i2");
    const int N = c.N();
    IneqReport<T> base = check_ineq_szform(c, cs, ds);
    if (!base.all_negative) throw std::invalid_argument("extend: seed system not strictly negative");

    for (int j = 2; j <= max_bisect; ++j) {
        T sq = T(1);
        for (int t = 0; t < j; ++t) sq /= T(2);
        T delta = sq * sq;  // sqrt(delta) = 2^-j exactly
        T lambda = T(1) / T(2);

        auto sp1 = rank_one_split(c.steps[i1 - 1], dir.abar_u, dir.abar_v, dir.bbar, xi, lambda, delta);
        SoN<T> neg_v = dir.abar_v * T(-1);
        auto sp2 = rank_one_split(c.steps[i2 - 1], (-dir.abar_u).eval(), neg_v, dir.bbar, xi, lambda, delta);

        TNConfig<T> ext;
        ext.P = c.P;
        std::vector<T> nc, nd;
        auto push = [&](const RParam<T>& st, const T& kap, const T& cv, const T& dv) {
            ext.steps.push_back(st);
            ext.kappas.push_back(kap);
            nc.push_back(cv);
            nd.push_back(dv);
        };
        T g0 = base.margin;  // strictness margin of the old system
        for (int i = 1; i <= N; ++i) {
            if (i == i1) {
                T kap = c.kappas[i - 1];
                push(sp1.C1, kap / lambda, cs[i - 1], ds[i - 1]);
                push(sp1.C2, (kap - lambda) / (T(1) - lambda), cs[i - 1], ds[i - 1]);  // c gets gamma1 below
            } else if (i == i2) {
                T kap = c.kappas[i - 1];
                push(sp2.C1, kap / lambda, cs[i - 1], ds[i - 1]);
                push(sp2.C2, (kap - lambda) / (T(1) - lambda), cs[i - 1], ds[i - 1]);
            } else {
                push(c.steps[i - 1], c.kappas[i - 1], cs[i - 1], ds[i - 1]);
            }
        }
        if (!ext.step_sum().is_zero()) throw std::runtime_error("extend: step sum broke (internal)");

        // gamma_1, gamma_2 midpoints of the exact feasible intervals for the
        // inserted neighbor pairs
        auto gamma_interval = [&](int ia, int ib, const T& dv) -> std::optional<T> {
            // need value(ia,ib) < 0 and value(ib,ia) < 0 where
            // c~_ib = c~_ia + gamma
            PairPoint<T> za = endpoint(ext, ia), zb = endpoint(ext, ib);
            Mat<T> D = zb.X - za.X;
            T d2 = det(Mat<T>(D.topLeftCorner(2, 2)));
            T lower = (za.Y.cwiseProduct(D)).sum() + dv * d2;          // gamma > lower
            T upper = -(((zb.Y.cwiseProduct((-D).eval())).sum()) + dv * d2);  // gamma < upper
            if (!(lower < upper)) return std::nullopt;
            return (lower + upper) / T(2);
        };
        int j1 = i1 + 1;           // index of C1~'s partner in the extended config
        int j2 = i2 + 2;           // after the first insertion, i2-block shifts by one
        auto g1 = gamma_interval(i1, i1 + 1, ds[i1 - 1]);
        auto g2 = gamma_interval(j2 - 1, j2, ds[i2 - 1]);
        (void)j1;
        if (g1 && g2 && scalar_traits<T>::abs(*g1) < g0 / T(2) && scalar_traits<T>::abs(*g2) < g0 / T(2)) {
            nc[i1] = cs[i1 - 1] + *g1;        // c of C1~'s partner (0-based slot i1)
            nc[j2 - 1] = cs[i2 - 1] + *g2;    // c of C2~'s partner
            IneqReport<T> rep = check_ineq_szform(ext, nc, nd);
            NondegReport nrep = check_nondegenerate(ext, tol);
            if (rep.all_negative && nrep.pass_except_span()) {
                ExtendedConfig<T> out;
                out.config = ext;
                out.c = nc;
                out.d = nd;
                out.delta_used = delta;
                out.margin = rep.margin;
                return out;
            }
        }
    }
    throw std::runtime_error("delta too large for strictness margins");
}

}  // namespace tconfig
