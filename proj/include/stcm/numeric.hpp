#pragma once

#include <array>
#include <cmath>

namespace stcm {

/// Gaussian tail probability Q(x) = P(N(0,1) > x) = erfc(x/sqrt(2))/2.
inline double q_function(double x) {
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

/// x^n for non-negative integer n by squaring.
inline double ipow(double x, int n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

/// 64-node Gauss-Legendre rule on [0, 1]. Nodes/weights are computed once by
/// Newton iteration on the Legendre recurrence.
struct GaussLegendre64 {
    std::array<double, 64> node;
    std::array<double, 64> weight;

    static const GaussLegendre64& get();
};

/// Integrates f over [a, b] with the fixed 64-node rule.
template <typename F>
double gauss_legendre_64(F&& f, double a, double b) {
    const auto& rule = GaussLegendre64::get();
    const double span = b - a;
    double sum = 0.0;
    for (int i = 0; i < 64; ++i)
        sum += rule.weight[i] * f(a + span * rule.node[i]);
    return span * sum;
}

} // namespace stcm
