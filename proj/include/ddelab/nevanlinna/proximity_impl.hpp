#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace ddelab {

namespace detail {

template <class G>
double adaptive_simpson(G& g, double a, double b, double fa, double fm, double fb, double whole, double tol, double rel, int depth,
                        bool& ok) {
    const double m = 0.5 * (a + b);
    const double lm = g(0.5 * (a + m)), rm = g(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * lm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * rm + fb);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * std::max(tol, rel * std::abs(left + right))) return left + right + diff / 15.0;
    if (depth <= 0) {
        ok = false;
        return left + right + diff / 15.0;
    }
    return adaptive_simpson(g, a, m, fa, lm, fm, left, 0.5 * tol, rel, depth - 1, ok) +
           adaptive_simpson(g, m, b, fm, rm, fb, right, 0.5 * tol, rel, depth - 1, ok);
}

} // namespace detail

template <class LogAbs>
double proximity(LogAbs&& log_abs, double r, const QuadratureOptions& quad, bool* converged) {
    const double two_pi = 2.0 * std::numbers::pi;
    auto g = [&](double theta) {
        double v = log_abs(std::polar(r, theta));
        // A node exactly on a pole: the integrand is integrable there, so
        // sample next to it instead.
        for (double eps = 1e-12; std::isinf(v) && v > 0 && eps < 1e-6; eps *= 10.0)
            v = log_abs(std::polar(r, theta + eps));
        if (std::isnan(v) || std::isinf(v)) return 0.0;
        return v > 0.0 ? v : 0.0;
    };
    const int arcs = std::max(quad.initial_arcs, 1);
    const double h = two_pi / arcs;
    bool ok = true;
    double total = 0.0;
    std::vector<double> nodes(static_cast<std::size_t>(2 * arcs + 1));
    for (int i = 0; i < 2 * arcs; ++i) nodes[static_cast<std::size_t>(i)] = g(0.5 * i * h);
    nodes.back() = nodes.front();
    // The tolerance scales with the coarse trapezoid value of the integral.
    double coarse = 0.0;
    for (int i = 0; i < 2 * arcs; ++i) coarse += nodes[static_cast<std::size_t>(i)] * 0.5 * h;
    const double tol = quad.abs_tol * (1.0 + std::abs(coarse));
    double fa = nodes.front();
    for (int i = 0; i < arcs; ++i) {
        const double a = i * h, b = (i + 1) * h;
        const double fm = nodes[static_cast<std::size_t>(2 * i + 1)];
        const double fb = nodes[static_cast<std::size_t>(2 * i + 2)];
        const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::adaptive_simpson(g, a, b, fa, fm, fb, whole, tol / arcs, quad.rel_tol,
                                               quad.max_depth, ok);
        fa = fb;
    }
    if (converged) *converged = ok;
    return total / two_pi;
}

} // namespace ddelab
