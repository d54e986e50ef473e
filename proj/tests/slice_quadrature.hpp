#ifndef KSTAB_TESTS_SLICE_QUADRATURE_HPP
#define KSTAB_TESTS_SLICE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "kstab/geometry.hpp"

namespace oracle {

// Gauss-Legendre nodes on [-1,1] by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n) {
        for (int i = 1; i <= n; ++i) {
            double z = std::cos(M_PI * (i - 0.25) / (n + 0.5)), pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1, p2 = 0;
                for (int j = 1; j <= n; ++j) {
                    double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1);
                double z1 = z;
                z = z1 - p1 / pp;
                if (std::abs(z - z1) < 1e-15) break;
            }
            x.push_back(z);
            w.push_back(2 / ((1 - z * z) * pp * pp));
        }
    }
};

/// Mean of x + y under exp(c (x + y)) on a polygon, integrating vertical
/// slices between consecutive vertex abscissae. No triangulation involved.
inline double diagonal_moment(const kstab::HPolytope& P, double c, int nodes = 40) {
    GaussLegendre gl(nodes);
    double mass = 0, m1 = 0;
    std::vector<double> cuts;
    for (const auto& v : kstab::vertices(P)) cuts.push_back(kstab::to_double(v[0]));
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s], b = cuts[s + 1];
        if (b - a < 1e-15) continue;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
            double lo = -1e300, hi = 1e300;
            for (const auto& r : P.rows()) {
                const double n0 = kstab::to_double(r.normal[0]), n1 = kstab::to_double(r.normal[1]);
                const double o = kstab::to_double(r.offset);
                if (n1 > 0) lo = std::max(lo, -(n0 * x + o) / n1);
                if (n1 < 0) hi = std::min(hi, -(n0 * x + o) / n1);
            }
            if (hi <= lo) continue;
            for (std::size_t j = 0; j < gl.x.size(); ++j) {
                const double y = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[j];
                const double wt = 0.25 * (b - a) * (hi - lo) * gl.w[i] * gl.w[j] * std::exp(c * (x + y));
                mass += wt;
                m1 += wt * (x + y);
            }
        }
    }
    return m1 / mass;
}

}  // namespace oracle

#endif
