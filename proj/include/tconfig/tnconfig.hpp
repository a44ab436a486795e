#pragma once

// T_N-configurations: base points and endpoints, nondegeneracy and wildness
// checks, scaling, the kernel of Dpi_1 assembled from the step tangent
// spaces, condition (C) against per-endpoint Hessian surrogates, and the
// L-subspace / Hessian-perturbation machinery behind the genericity
// argument.

#include "tconfig/rconn.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace tconfig {

template <class T>
struct TNConfig {
    PairPoint<T> P;
    std::vector<RParam<T>> steps;
    std::vector<T> kappas;  // all > 1

    int N() const { return static_cast<int>(steps.size()); }
    int M() const { return P.M(); }
    int n() const { return P.n(); }

    PairPoint<T> step_pair(int i) const { return assemble(steps[i]); }

    // sum of assembled steps; zero for a valid configuration
    PairPoint<T> step_sum() const {
        PairPoint<T> s = PairPoint<T>::Zero(M(), n());
        for (int i = 0; i < N(); ++i) s = s + step_pair(i);
        return s;
    }
};

// pi_k = P + C_1 + ... + C_{k-1}; 1-based k as in the construction.
template <class T>
PairPoint<T> base_point(const TNConfig<T>& c, int k) {
    if (k < 1 || k > c.N()) throw std::out_of_range("base_point: index out of range");
    PairPoint<T> p = c.P;
    for (int i = 0; i < k - 1; ++i) p = p + c.step_pair(i);
    return p;
}

// phi_k = pi_k + kappa_k C_k
template <class T>
PairPoint<T> endpoint(const TNConfig<T>& c, int k) {
    if (k < 1 || k > c.N()) throw std::out_of_range("endpoint: index out of range");
    return base_point(c, k) + c.step_pair(k - 1) * c.kappas[k - 1];
}

// Remark-style scaling: steps scaled by mu, so endpoints become
// (1 - mu) P + mu Z_k.
template <class T>
TNConfig<T> scale(const TNConfig<T>& c, const T& mu) {
    if (!(mu > T(0)) || mu > T(1)) throw std::invalid_argument("scale: mu must lie in (0,1]");
    TNConfig<T> out = c;
    for (auto& s : out.steps) {
        s.u *= mu;  // scaling u scales the assembled element; b is a direction
        s.v = s.v * mu;
    }
    return out;
}

// kappa-scaling: same steps, kappas replaced by mu*kappa (requires
// mu*kappa_i > 1). Endpoints become (1 - mu) P_k + mu Z_k per k.
template <class T>
TNConfig<T> kappa_scale(const TNConfig<T>& c, const T& mu) {
    TNConfig<T> out = c;
    for (auto& k : out.kappas) {
        k = k * mu;
        if (!(k > T(1))) throw std::invalid_argument("kappa_scale: mu*kappa must stay > 1");
    }
    return out;
}

// ===== nondegeneracy / wildness =============================================

struct ConditionResult {
    bool pass = true;
    std::string witness;
};

struct NondegReport {
    ConditionResult steps_in_Ro;       // (1)
    ConditionResult span_full;         // (2)
    ConditionResult consecutive_b;     // (3)
    ConditionResult consecutive_a;     // (4)
    ConditionResult no_R_connections;  // (5)

    bool pass() const {
        return steps_in_Ro.pass && span_full.pass && consecutive_b.pass && consecutive_a.pass &&
               no_R_connections.pass;
    }
    bool pass_except_span() const {
        return steps_in_Ro.pass && consecutive_b.pass && consecutive_a.pass && no_R_connections.pass;
    }
};

template <class T>
NondegReport check_nondegenerate(const TNConfig<T>& c, T tol = T(0)) {
    NondegReport rep;
    const int N = c.N(), n = c.n();
    // (1) every step in R^o
    for (int i = 0; i < N; ++i) {
        if (c.steps[i].b.isZero(0) || c.steps[i].u.isZero(0)) {
            rep.steps_in_Ro.pass = false;
            rep.steps_in_Ro.witness = "step " + std::to_string(i + 1) + " has b = 0 or u = 0";
            break;
        }
    }
    // (2) span{b_i} = R^n
    {
        Mat<T> bs(n, N);
        for (int i = 0; i < N; ++i) bs.col(i) = c.steps[i].b;
        int r = rank(bs, tol);
        if (r < n) {
            rep.span_full.pass = false;
            rep.span_full.witness = "span{b_i} has dimension " + std::to_string(r);
        }
    }
    // (3)/(4) consecutive independence, cyclic
    for (int i = 0; i < N; ++i) {
        int j = (i + 1) % N;
        Mat<T> bb(n, 2);
        bb.col(0) = c.steps[i].b;
        bb.col(1) = c.steps[j].b;
        if (rank(bb, tol) < 2 && rep.consecutive_b.pass) {
            rep.consecutive_b.pass = false;
            rep.consecutive_b.witness = "b_" + std::to_string(i + 1) + ", b_" + std::to_string(j + 1) +
                                        " dependent";
        }
        Mat<T> aa(c.M(), 2);
        aa.col(0) = c.steps[i].u;
        aa.col(1) = c.steps[j].u;
        if (rank(aa, tol) < 2 && rep.consecutive_a.pass) {
            rep.consecutive_a.pass = false;
            rep.consecutive_a.witness = "a'_" + std::to_string(i + 1) + ", a'_" + std::to_string(j + 1) +
                                        " dependent";
        }
    }
    // (5) Z_k - Z_l not in R
    std::vector<PairPoint<T>> Z;
    for (int k = 1; k <= N; ++k) Z.push_back(endpoint(c, k));
    for (int k = 0; k < N && rep.no_R_connections.pass; ++k)
        for (int l = k + 1; l < N; ++l) {
            RMembership<T> m = is_in_R<T>(Z[k] - Z[l], tol);
            if (m.in_R) {
                rep.no_R_connections.pass = false;
                rep.no_R_connections.witness =
                    "Z_" + std::to_string(k + 1) + " - Z_" + std::to_string(l + 1) + " lies in R";
                break;
            }
        }
    return rep;
}

// Wild for direction beta (1-based): the endpoint X-columns X_k e_beta take
// at least two distinct values.
template <class T>
bool check_wild(const TNConfig<T>& c, int beta, T tol = T(0)) {
    if (beta < 1 || beta > c.n()) throw std::out_of_range("check_wild: beta out of range");
    std::vector<Vec<T>> cols;
    for (int k = 1; k <= c.N(); ++k) cols.push_back(endpoint(c, k).X.col(beta - 1));
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = i + 1; j < cols.size(); ++j) {
            Vec<T> d = cols[i] - cols[j];
            if constexpr (scalar_traits<T>::is_exact) {
                if (!d.isZero(0)) return true;
            } else {
                double t = (tol == T(0)) ? kDefaultFloatTol : tol;
                if (d.norm() > t * (1.0 + cols[i].norm())) return true;
            }
        }
    return false;
}

template <class T>
bool check_wild_all(const TNConfig<T>& c, T tol = T(0)) {
    for (int b = 1; b <= c.n(); ++b)
        if (!check_wild(c, b, tol)) return false;
    return true;
}

// ===== tuple-space machinery ================================================

// Tuples (Z_1, ..., Z_N) with Z_k in R^{2Mn} flattened; slot k occupies
// coordinates [k*2Mn, (k+1)*2Mn).
template <class T>
Vec<T> flatten_tuple(const std::vector<PairPoint<T>>& zs) {
    const int block = 2 * zs[0].M() * zs[0].n();
    Vec<T> v = Vec<T>::Zero(block * static_cast<int>(zs.size()));
    for (size_t k = 0; k < zs.size(); ++k) v.segment(static_cast<int>(k) * block, block) = flatten(zs[k]);
    return v;
}

namespace detail {

// Basis of the per-step variation spaces F^i together with a basis of the
// constrained tuple space T C_N = {(C_1..C_N) in F^1 x ... x F^N :
// sum C_i = 0}, returned as tuples of flattened step variations.
template <class T>
struct StepTangents {
    std::vector<Mat<T>> frak;       // F^i basis, 2Mn x dim_i
    std::vector<Mat<T>> tuple_var;  // T C_N basis: per element, 2Mn x N (column i = C_i)
};

template <class T>
StepTangents<T> step_tangents(const TNConfig<T>& c, T tol = T(0)) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int block = 2 * M * n;
    StepTangents<T> st;
    std::vector<int> offsets(N + 1, 0);
    for (int i = 0; i < N; ++i) {
        Subspace<T> f = tangent_frakC(c.steps[i], tol);
        st.frak.push_back(f.basis);
        offsets[i + 1] = offsets[i] + f.dim();
    }
    const int total = offsets[N];
    // constraint: sum over steps of F^i-combinations vanishes
    Mat<T> constraint(block, total);
    for (int i = 0; i < N; ++i)
        constraint.middleCols(offsets[i], static_cast<int>(st.frak[i].cols())) = st.frak[i];
    Mat<T> ker = nullspace(constraint, tol);
    for (int j = 0; j < ker.cols(); ++j) {
        Mat<T> tup = Mat<T>::Zero(block, N);
        for (int i = 0; i < N; ++i)
            tup.col(i) = st.frak[i] * ker.col(j).segment(offsets[i], static_cast<int>(st.frak[i].cols()));
        st.tuple_var.push_back(tup);
    }
    return st;
}

}  // namespace detail

// ker Dpi_1 as a subspace of (R^{2Mn})^N: spanned by the kappa-directions
// (slot l carries C-bar_l) and the Z-directions Z_l = sum_{k<l} C_k +
// kappa_l C_l over T C_N. Dimension N(Mn+n) - 2Mn for nondegenerate inputs.
template <class T>
Subspace<T> ker_dpi1(const TNConfig<T>& c, T tol = T(0)) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int block = 2 * M * n;
    detail::StepTangents<T> st = detail::step_tangents(c, tol);
    std::vector<Vec<T>> gens;
    // kappa-directions
    for (int l = 0; l < N; ++l) {
        Vec<T> v = Vec<T>::Zero(block * N);
        v.segment(l * block, block) = flatten(c.step_pair(l));
        gens.push_back(v);
    }
    // Z-directions
    for (const auto& tup : st.tuple_var) {
        Vec<T> v = Vec<T>::Zero(block * N);
        Vec<T> acc = Vec<T>::Zero(block);
        for (int l = 0; l < N; ++l) {
            Vec<T> zl = acc + c.kappas[l] * tup.col(l);
            v.segment(l * block, block) = zl;
            acc += tup.col(l);
        }
        gens.push_back(v);
    }
    Mat<T> g(block * N, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) g.col(static_cast<int>(j)) = gens[j];
    Subspace<T> ker = make_span(block * N, g, tol);
    const int expected = N * (M * n + n) - 2 * M * n;
    if (ker.dim() != expected) {
        std::ostringstream os;
        os << "degenerate configuration: dim ker Dpi_1 = " << ker.dim() << ", expected " << expected;
        throw std::runtime_error(os.str());
    }
    return ker;
}

// The two pieces of ker Dpi_1 (kappa-directions and Z-directions); their
// intersection is {0} for nondegenerate configurations.
template <class T>
std::pair<Subspace<T>, Subspace<T>> ker_dpi1_split(const TNConfig<T>& c, T tol = T(0)) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int block = 2 * M * n;
    detail::StepTangents<T> st = detail::step_tangents(c, tol);
    Mat<T> gk = Mat<T>::Zero(block * N, N);
    for (int l = 0; l < N; ++l) gk.col(l).segment(l * block, block) = flatten(c.step_pair(l));
    Mat<T> gz = Mat<T>::Zero(block * N, static_cast<int>(st.tuple_var.size()));
    for (size_t j = 0; j < st.tuple_var.size(); ++j) {
        Vec<T> acc = Vec<T>::Zero(block);
        for (int l = 0; l < N; ++l) {
            gz.col(static_cast<int>(j)).segment(l * block, block) = acc + c.kappas[l] * st.tuple_var[j].col(l);
            acc += st.tuple_var[j].col(l);
        }
    }
    return {make_span(block * N, gk, tol), make_span(block * N, gz, tol)};
}

// ===== condition (C) ========================================================

template <class T>
struct HessianSet {
    std::vector<Mat<T>> A;  // per endpoint, symmetric Mn x Mn

    static HessianSet identity(int N, int Mn) {
        HessianSet h;
        for (int i = 0; i < N; ++i) h.A.push_back(Mat<T>::Identity(Mn, Mn));
        return h;
    }
};

template <class T>
struct ConditionCReport {
    bool transversal = false;
    int sum_dim = 0;          // dim(T K + T M)
    int expected_sum_dim = 0;  // 2MnN
    std::vector<int> pi_ranks;  // rank of Dpi_k on the intersection, per k
    bool pass = false;
};

namespace detail {

// T K_F = V_1 x ... x V_N with V_i the graph of A_i.
template <class T>
Subspace<T> graph_product(const TNConfig<T>& c, const HessianSet<T>& H, T tol) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int mn = M * n, block = 2 * mn;
    Mat<T> g = Mat<T>::Zero(block * N, mn * N);
    for (int i = 0; i < N; ++i)
        for (int e = 0; e < mn; ++e) {
            g.col(i * mn + e).segment(i * block, mn) = Mat<T>::Identity(mn, mn).col(e);
            g.col(i * mn + e).segment(i * block + mn, mn) = H.A[i].col(e);
        }
    return make_span(block * N, g, tol);
}

}  // namespace detail

// Transversality of T M_N and T K_F plus the submersion property of every
// pi_k restricted to the intersection.
template <class T>
ConditionCReport<T> check_condition_C(const TNConfig<T>& c, const HessianSet<T>& H, T tol = T(0)) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int mn = M * n, block = 2 * mn;
    ConditionCReport<T> rep;
    rep.expected_sum_dim = 2 * mn * N;

    detail::StepTangents<T> st = detail::step_tangents(c, tol);
    const int cdim = static_cast<int>(st.tuple_var.size());

    // T M_N from the parametrization derivative: columns ordered as
    // (Q-directions | T C_N-directions | kappa-directions).
    const int mdim = block + cdim + N;
    Mat<T> dphi = Mat<T>::Zero(block * N, mdim);
    for (int e = 0; e < block; ++e)
        for (int l = 0; l < N; ++l) dphi(l * block + e, e) = T(1);
    for (int j = 0; j < cdim; ++j) {
        Vec<T> acc = Vec<T>::Zero(block);
        for (int l = 0; l < N; ++l) {
            dphi.col(block + j).segment(l * block, block) = acc + c.kappas[l] * st.tuple_var[j].col(l);
            acc += st.tuple_var[j].col(l);
        }
    }
    for (int l = 0; l < N; ++l) dphi.col(block + cdim + l).segment(l * block, block) = flatten(c.step_pair(l));

    Subspace<T> tm = make_span(block * N, dphi, tol);
    Subspace<T> tk = detail::graph_product(c, H, tol);

    rep.sum_dim = subspace_sum_dim(tm, tk, tol);
    rep.transversal = (rep.sum_dim == rep.expected_sum_dim);

    // Dpi_k on the intersection: pull each intersection vector back through
    // the (injective) parametrization and read off Q + C_1 + ... + C_{k-1}.
    Subspace<T> inter = subspace_intersection(tm, tk, tol);
    std::vector<Vec<T>> pulled;  // parameter coordinates per intersection basis vector
    for (int j = 0; j < inter.dim(); ++j) {
        auto x = solve<T>(dphi, inter.basis.col(j), tol);
        if (!x) throw std::runtime_error("condition C: intersection vector outside the parametrized tangent");
        pulled.push_back(*x);
    }
    rep.pi_ranks.resize(N, 0);
    bool ranks_ok = true;
    for (int k = 1; k <= N; ++k) {
        Mat<T> img(block, std::max<int>(1, inter.dim()));
        img.setZero();
        for (int j = 0; j < inter.dim(); ++j) {
            Vec<T> q = pulled[j].head(block);
            for (int l = 0; l < k - 1; ++l)
                for (int j2 = 0; j2 < cdim; ++j2) q += pulled[j](block + j2) * st.tuple_var[j2].col(l);
            img.col(j) = q;
        }
        rep.pi_ranks[k - 1] = (inter.dim() == 0) ? 0 : rank(img, tol);
        if (rep.pi_ranks[k - 1] != block) ranks_ok = false;
    }
    rep.pass = rep.transversal && ranks_ok;
    return rep;
}

// ===== the L-subspace of the genericity argument ============================

template <class T>
struct FindLResult {
    Subspace<T> L;
    bool verified_exhaustively = false;
    int checked_sets = 0;
};

namespace detail {

// dim(L ∩ im p_I) where p_I zeroes the slots in I.
template <class T>
int dim_intersect_coordinate(const Subspace<T>& L, const std::vector<int>& slots, int block, T tol) {
    if (slots.empty()) return L.dim();
    Mat<T> rows(static_cast<int>(slots.size()) * block, L.dim());
    for (size_t s = 0; s < slots.size(); ++s)
        rows.middleRows(static_cast<int>(s) * block, block) = L.basis.middleRows(slots[s] * block, block);
    if (L.dim() == 0) return 0;
    Mat<T> ker = nullspace(rows, tol);
    return static_cast<int>(ker.cols());
}

}  // namespace detail

// An Mn*N-dimensional subspace L of ker Dpi_1 with
// dim(L ∩ im p_I) <= Mn(N - |I|) for every slot set I. Seeded generic
// selection inside the kernel, certified by explicit rank checks
// (exhaustive for N <= 8, sampled otherwise).
template <class T>
FindLResult<T> find_L(const TNConfig<T>& c, T tol = T(0), std::uint64_t seed = 1,
                      int max_attempts = 8) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int mn = M * n, block = 2 * mn;
    if (N < 2 * M)
        throw std::invalid_argument("find_L: requires N >= 2M so that ker Dpi_1 can contain L");
    Subspace<T> ker = ker_dpi1(c, tol);
    const int D = ker.dim(), want = mn * N;

    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Mat<T> mix(D, want);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < want; ++j) mix(i, j) = rng.template next_scalar<T>(-9, 9);
        Subspace<T> L = make_span(block * N, (ker.basis * mix).eval(), tol);
        if (L.dim() != want) continue;

        bool ok = true;
        std::vector<int> bad;
        int checked = 0;
        auto check_set = [&](const std::vector<int>& slots) {
            ++checked;
            int d = detail::dim_intersect_coordinate(L, slots, block, tol);
            if (d > mn * (N - static_cast<int>(slots.size()))) {
                ok = false;
                bad = slots;
            }
        };
        if (N <= 8) {
            for (std::uint32_t massk = 1; massk < (1u << N) && ok; ++massk) {
                std::vector<int> slots;
                for (int i = 0; i < N; ++i)
                    if (massk & (1u << i)) slots.push_back(i);
                check_set(slots);
            }
        } else {
            // all singletons and pairs, plus random larger sets
            for (int i = 0; i < N && ok; ++i) check_set({i});
            for (int i = 0; i < N && ok; ++i)
                for (int j = i + 1; j < N && ok; ++j) check_set({i, j});
            for (int t = 0; t < 4 * N && ok; ++t) {
                int k = static_cast<int>(rng.next_int(3, N));
                std::vector<int> slots;
                for (int i = 0; i < N; ++i) slots.push_back(i);
                for (int i = N - 1; i > 0; --i) std::swap(slots[i], slots[rng.next_int(0, i)]);
                slots.resize(k);
                std::sort(slots.begin(), slots.end());
                check_set(slots);
            }
        }
        if (ok) {
            FindLResult<T> res;
            res.L = L;
            res.verified_exhaustively = (N <= 8);
            res.checked_sets = checked;
            return res;
        }
        if (attempt == max_attempts - 1) {
            std::ostringstream os;
            os << "find_L: projection bound violated for slot set {";
            for (size_t i = 0; i < bad.size(); ++i) os << (i ? "," : "") << bad[i] + 1;
            os << "}";
            throw std::runtime_error(os.str());
        }
    }
    throw std::runtime_error("find_L: could not reach dimension Mn*N inside ker Dpi_1");
}

// Symmetric perturbations A_i of H0 with |A_i - A0_i| < delta such that the
// product of graphs meets L trivially; randomized with retry, deterministic
// under seed.
template <class T>
HessianSet<T> perturb_hessians(const TNConfig<T>& c, const Subspace<T>& L, const HessianSet<T>& H0,
                               const T& delta, std::uint64_t seed, T tol = T(0), int max_retries = 10) {
    const int N = c.N(), M = c.M(), n = c.n();
    const int mn = M * n, block = 2 * mn;
    if (!(delta > T(0))) throw std::invalid_argument("perturb_hessians: delta must be positive");
    if (L.dim() == 0) return H0;

    Rng rng(seed);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        HessianSet<T> H = H0;
        if (attempt > 0) {
            // scale keeps the Frobenius norm of the perturbation below delta
            T scale = delta / (T(2 * mn) * T(1000));
            for (int i = 0; i < N; ++i) {
                Mat<T> S(mn, mn);
                for (int r = 0; r < mn; ++r)
                    for (int s2 = r; s2 < mn; ++s2) {
                        T e = rng.template next_scalar<T>(-999, 999) * scale;
                        S(r, s2) = e;
                        S(s2, r) = e;
                    }
                H.A[i] = H0.A[i] + S;
            }
        }
        Subspace<T> tk = detail::graph_product(c, H, tol);
        Mat<T> stacked(block * N, tk.dim() + L.dim());
        stacked.leftCols(tk.dim()) = tk.basis;
        stacked.rightCols(L.dim()) = L.basis;
        if (rank(stacked, tol) == tk.dim() + L.dim()) return H;
    }
    throw std::runtime_error("perturb_hessians: max retries exceeded");
}

}  // namespace tconfig
