#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fhchain {

// Gauss-Legendre nodes/weights on [-1,1], computed once per order by Newton
// iteration on the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> node;
    std::vector<double> weight;

    explicit GaussLegendre(int n) : node(n), weight(n) {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    // composite integration of f over [a,b] with `panels` equal panels
    template <typename F, typename R = decltype(std::declval<F>()(0.0))>
    R integrate(F&& f, double a, double b, int panels) const {
        R sum{};
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            double mid = a + (p + 0.5) * h;
            for (std::size_t i = 0; i < node.size(); ++i)
                sum += weight[i] * f(mid + 0.5 * h * node[i]);
        }
        return sum * (0.5 * h);
    }
};

} // namespace fhchain
