#include "ddelab/analytic/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

std::array<cplx, 3> cubic_roots(cplx a3, cplx a2, cplx a1, cplx a0) {
    const cplx b2 = a2 / a3, b1 = a1 / a3, b0 = a0 / a3;
    auto f = [&](cplx x) { return ((x + b2) * x + b1) * x + b0; };
    auto df = [&](cplx x) { return (3.0 * x + 2.0 * b2) * x + b1; };
    const double scale = 1.0 + std::max({std::abs(b2), std::sqrt(std::abs(b1)), std::cbrt(std::abs(b0))});
    std::array<cplx, 3> r{cplx(0.4, 0.9) * scale, std::pow(cplx(0.4, 0.9), 2) * scale,
                          std::pow(cplx(0.4, 0.9), 3) * scale};
    for (int it = 0; it < 500; ++it) {
        double delta = 0.0;
        for (int i = 0; i < 3; ++i) {
            cplx den = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= r[i] - r[j];
            if (std::abs(den) == 0.0) den = 1e-300;
            const cplx step = f(r[i]) / den;
            r[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta <= 1e-17 * scale) break;
    }
    for (auto& x : r)
        for (int it = 0; it < 3; ++it) {
            const cplx d = df(x);
            if (std::abs(d) == 0.0) break;
            x -= f(x) / d;
        }
    return r;
}

cplx agm(cplx a, cplx b) {
    for (int it = 0; it < 100; ++it) {
        const cplx an = 0.5 * (a + b);
        cplx bn = std::sqrt(a * b);
        if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    }
    return 0.5 * (a + b);
}

Weierstrass::Weierstrass(cplx g2, cplx g3) : g2_(g2), g3_(g3) {
    const cplx disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    const double size = std::pow(std::abs(g2), 3) + 27.0 * std::norm(g3);
    if (size == 0.0 || std::abs(disc) <= 1e-12 * size)
        throw DomainError("discriminant g2^3 - 27 g3^2 vanishes: the curve is singular");

    c_.assign(kLaurentTerms + 2, cplx(0));
    c_[2] = g2 / 20.0;
    c_[3] = g3 / 28.0;
    for (int k = 4; k < static_cast<int>(c_.size()); ++k) {
        cplx s = 0;
        for (int m = 2; m <= k - 2; ++m) s += c_[static_cast<std::size_t>(m)] * c_[static_cast<std::size_t>(k - m)];
        c_[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    // Radius of convergence estimate from the tail of the coefficients:
    // |c_k| ~ R^(2 - 2k).
    double r_est = 1e300;
    for (int k = kLaurentTerms - 4; k <= kLaurentTerms + 1; ++k) {
        const double a = std::abs(c_[static_cast<std::size_t>(k)]);
        if (a > 0) r_est = std::min(r_est, std::pow(a, -1.0 / (2.0 * k - 2.0)));
    }
    series_radius_ = 0.25 * r_est;
    roots_ = cubic_roots(4.0, 0.0, -g2, -g3);
    compute_periods();
}

WpValue Weierstrass::series(cplx z) const {
    const cplx z2 = z * z;
    cplx p = 0, dp = 0;
    // Horner over powers of z^2: p = z^-2 + sum c_k z^(2k-2).
    for (int k = static_cast<int>(c_.size()) - 1; k >= 2; --k) {
        p = p * z2 + c_[static_cast<std::size_t>(k)];
        dp = dp * z2 + c_[static_cast<std::size_t>(k)] * (2.0 * k - 2.0);
    }
    // p currently holds sum c_k z^(2k-4); dp holds sum (2k-2) c_k z^(2k-4).
    WpValue v;
    v.p = 1.0 / z2 + p * z2;
    v.dp = -2.0 / (z2 * z) + dp * z;
    return v;
}

WpValue Weierstrass::halve_and_double(cplx z) const {
    int n = 0;
    cplx w = z;
    while (std::abs(w) > series_radius_ && n < 200) {
        w *= 0.5;
        ++n;
    }
    WpValue v = series(w);
    for (int i = 0; i < n; ++i) {
        const cplx p = v.p, dp = v.dp;
        const cplx ddp = 6.0 * p * p - 0.5 * g2_;
        const cplx q = ddp / dp;
        v.p = 0.25 * q * q - 2.0 * p;
        v.dp = -dp + 3.0 * p * q - 0.25 * q * q * q;
    }
    return v;
}

WpValue Weierstrass::eval_unreduced(cplx z) const {
    if (std::abs(z) <= 1e-150) return {0, 0, true};
    return halve_and_double(z);
}

std::pair<long, long> Weierstrass::nearest_lattice(cplx z) const {
    // Solve z = x p1 + y p2 in real coordinates.
    const double a = p1_.real(), b = p2_.real(), c = p1_.imag(), d = p2_.imag();
    const double det = a * d - b * c;
    const double x = (d * z.real() - b * z.imag()) / det;
    const double y = (-c * z.real() + a * z.imag()) / det;
    long m = std::lround(x), n = std::lround(y);
    // The reduced basis makes the rounded point within one step of the nearest one.
    long bm = m, bn = n;
    double best = 1e300;
    for (long dm = -1; dm <= 1; ++dm)
        for (long dn = -1; dn <= 1; ++dn) {
            const double dist = std::abs(z - (static_cast<double>(m + dm) * p1_ + static_cast<double>(n + dn) * p2_));
            if (dist < best) {
                best = dist;
                bm = m + dm;
                bn = n + dn;
            }
        }
    return {bm, bn};
}

cplx Weierstrass::reduce(cplx z) const {
    auto [m, n] = nearest_lattice(z);
    return z - (static_cast<double>(m) * p1_ + static_cast<double>(n) * p2_);
}

WpValue Weierstrass::eval(cplx z) const {
    const cplx r = reduce(z);
    if (std::abs(r) <= 1e-13 * std::abs(p1_)) return {0, 0, true};
    return halve_and_double(r);
}

void Weierstrass::compute_periods() {
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const cplx z0(0.123456789 * series_radius_, 0.0987654321 * series_radius_);
    const WpValue base = eval_unreduced(z0);
    double best_err = 1e300, best_area = 1e300;
    for (const auto& pm : perms) {
        const cplx e1 = roots_[static_cast<std::size_t>(pm[0])], e2 = roots_[static_cast<std::size_t>(pm[1])],
                   e3 = roots_[static_cast<std::size_t>(pm[2])];
        for (int sb = 0; sb < 2; ++sb) {
            const cplx sa = std::sqrt(e1 - e3);
            const cplx s1 = (sb ? -1.0 : 1.0) * std::sqrt(e1 - e2);
            const cplx s3 = (sb ? -1.0 : 1.0) * std::sqrt(e2 - e3);
            const cplx m1 = agm(sa, s1), m3 = agm(sa, s3);
            if (std::abs(m1) == 0.0 || std::abs(m3) == 0.0) continue;
            const cplx w1 = kPi / (2.0 * m1), w3 = cplx(0, 1) * kPi / (2.0 * m3);
            if (!finite(w1) || !finite(w3)) continue;
            if (std::abs((w3 / w1).imag()) < 1e-8) continue;
            double err = 0;
            for (cplx per : {2.0 * w1, 2.0 * w3}) {
                const WpValue shifted = eval_unreduced(z0 + per);
                err = std::max(err, std::abs(shifted.p - base.p) / (1.0 + std::abs(base.p)));
            }
            // A basis of a proper sublattice also passes the shift test; at true
            // half periods p takes the three distinct roots.
            double emax = 0;
            for (const cplx& e : roots_) emax = std::max(emax, std::abs(e));
            std::array<cplx, 3> half{};
            int hi = 0;
            for (cplx h : {w1, w3, w1 + w3}) {
                const WpValue v = eval_unreduced(h);
                half[static_cast<std::size_t>(hi++)] = v.p;
                double d = 1e300;
                for (const cplx& e : roots_) d = std::min(d, std::abs(v.p - e));
                err = std::max(err, v.pole || !finite(v.p) ? 1e300 : 1e-3 * d / (1.0 + emax));
            }
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (std::abs(half[static_cast<std::size_t>(a)] - half[static_cast<std::size_t>(b)]) <
                        1e-6 * (1.0 + emax))
                        err = 1e300;
            // Every validated pair spans a sublattice of the period lattice, so
            // prefer the smallest cell among candidates that pass.
            const double area = std::abs((std::conj(w1) * w3).imag());
            const bool ok = err <= 1e-6;
            const bool better = ok ? (best_err > 1e-6 || area < best_area * (1.0 - 1e-6)) : err < best_err;
            if (better && (ok || best_err > 1e-6)) {
                best_area = area;
                best_err = err;
                p1_ = 2.0 * w1;
                p2_ = 2.0 * w3;
            }
        }
    }
    if (best_err > 1e-6) throw DomainError("period computation failed to validate");
    // Lagrange-Gauss reduction of the basis.
    for (int it = 0; it < 100; ++it) {
        if (std::abs(p2_) < std::abs(p1_)) std::swap(p1_, p2_);
        const double mu = std::round((p2_ / p1_).real());
        if (mu == 0.0) break;
        p2_ -= mu * p1_;
    }
    if (std::abs(p2_) < std::abs(p1_)) std::swap(p1_, p2_);
}

cplx Weierstrass::solve(cplx value, cplx guess) const {
    cplx z = guess;
    for (int it = 0; it < 100; ++it) {
        const WpValue v = eval(z);
        if (v.pole) {
            z += 0.01 * p1_;
            continue;
        }
        const cplx step = (v.p - value) / v.dp;
        z -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    return reduce(z);
}

WpValue wp_eval(cplx z, cplx g2, cplx g3) { return Weierstrass(g2, g3).eval(z); }

} // namespace ddelab
