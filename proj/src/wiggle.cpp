#include "tconfig/polyfactory.hpp"

namespace tconfig {

LHEstimate check_LH(const MatD& H, int M, int n, int grid, std::uint64_t seed) {
    if (H.rows() != M * n || H.cols() != M * n) throw std::invalid_argument("check_LH: H must be Mn x Mn");
    Rng rng(seed);
    auto value = [&](const VecD& xi, const VecD& eta) {
        VecD w(M * n);
        for (int i = 0; i < M; ++i)
            for (int a = 0; a < n; ++a) w(i * n + a) = xi(i) * eta(a);
        return w.dot(H * w);
    };
    auto random_unit = [&](int dim) {
        VecD v(dim);
        double nrm = 0;
        while (nrm < 1e-12) {
            for (int i = 0; i < dim; ++i) v(i) = 2 * rng.next_unit() - 1;
            nrm = v.norm();
        }
        return VecD(v / nrm);
    };
    LHEstimate est;
    est.grid = grid;
    bool first = true;
    for (int t = 0; t < grid * grid; ++t) {
        VecD xi = random_unit(M), eta = random_unit(n);
        double v = value(xi, eta);
        if (first || v < est.lower_bound) {
            est.lower_bound = v;
            est.xi = xi;
            est.eta = eta;
            first = false;
        }
    }
    // one local refinement pass around the best direction pair
    double step = 0.2;
    for (int pass = 0; pass < 24; ++pass) {
        bool improved = false;
        for (int i = 0; i < M + n; ++i) {
            for (double sgn : {1.0, -1.0}) {
                VecD xi = est.xi, eta = est.eta;
                if (i < M)
                    xi(i) += sgn * step;
                else
                    eta(i - M) += sgn * step;
                xi /= xi.norm();
                eta /= eta.norm();
                double v = value(xi, eta);
                if (v < est.lower_bound) {
                    est.lower_bound = v;
                    est.xi = xi;
                    est.eta = eta;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return est;
}

}  // namespace tconfig
