#include "stcm/numeric.hpp"

#include <numbers>

namespace stcm {

namespace {

// Classic Newton iteration for Legendre roots, nodes mapped to [0, 1].
GaussLegendre64 make_rule() {
    constexpr int n = 64;
    GaussLegendre64 rule{};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.node[i] = 0.5 * (1.0 - x);
        rule.node[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weight[i] = 0.5 * w;
        rule.weight[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace

const GaussLegendre64& GaussLegendre64::get() {
    static const GaussLegendre64 rule = make_rule();
    return rule;
}

} // namespace stcm
