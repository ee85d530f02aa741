#include "ddelab/analytic/verifiers.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

} // namespace

nlohmann::json VerifierReport::to_json() const {
    return {{"check", check}, {"params", params}, {"samples", samples},
            {"max_residual", max_residual}, {"tol", tol}, {"pass", pass}};
}

EllipticParams make_elliptic_params(cplx g2, cplx g3, cplx omega, cplx lambda, int alpha_sign, bool flipped) {
    if (lambda == cplx(0)) throw DomainError("lambda must be nonzero for the elliptic family");
    const Weierstrass wp(g2, g3);
    const WpValue v = wp.eval(omega);
    if (v.pole) throw DomainError("Omega is a pole of p: the elliptic family requires p'(Omega) finite");
    const double scale = 1.0 + std::pow(std::abs(v.p), 1.5);
    if (std::abs(v.dp) <= 1e-9 * scale)
        throw DomainError("p'(Omega) = 0: the elliptic family requires p'(Omega; g2, g3) != 0");
    EllipticParams e{g2, g3, omega, lambda, 0, alpha_sign >= 0 ? 1 : -1, flipped};
    const cplx alpha2 = (flipped ? 1.0 : -1.0) * lambda * omega / v.dp;
    e.alpha = static_cast<double>(e.alpha_sign) * std::sqrt(alpha2);
    return e;
}

VerifierReport verify_elliptic_family(const EllipticParams& ep, int samples, double tol, std::uint64_t seed) {
    const Weierstrass wp(ep.g2, ep.g3);
    const cplx p_omega = wp.eval(ep.omega).p;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    VerifierReport r;
    r.check = "elliptic";
    r.tol = tol;
    r.params = {{"g2", cjson(ep.g2)},       {"g3", cjson(ep.g3)},     {"Omega", cjson(ep.omega)},
                {"lambda", cjson(ep.lambda)}, {"alpha", cjson(ep.alpha)}, {"alpha_sign", ep.alpha_sign},
                {"flipped", ep.flipped}};
    int done = 0, tries = 0;
    while (done < samples && tries < 100 * samples) {
        ++tries;
        const cplx z(u(rng), u(rng));
        const WpValue m = wp.eval(ep.omega * (z - 1.0)), c = wp.eval(ep.omega * z), p = wp.eval(ep.omega * (z + 1.0));
        if (m.pole || c.pole || p.pole) continue;
        if (std::abs(m.p) > 1e4 || std::abs(c.p) > 1e4 || std::abs(p.p) > 1e4) continue;
        const cplx w = ep.alpha * (c.p - p_omega);
        if (std::abs(w) < 1e-3 * std::abs(ep.alpha)) continue;
        const cplx wp1 = ep.alpha * (p.p - p_omega), wm1 = ep.alpha * (m.p - p_omega);
        const cplx dw = ep.alpha * ep.omega * c.dp;
        const cplx rhs = ep.lambda * dw / (w * w);
        const double res = std::abs(wp1 - wm1 - rhs) / (1.0 + std::abs(wp1) + std::abs(wm1) + std::abs(rhs));
        r.max_residual = std::max(r.max_residual, res);
        ++done;
    }
    if (done < samples) throw DomainError("could not place enough sample points away from poles");
    r.samples = done;
    r.pass = r.max_residual <= tol;
    return r;
}

VerifierReport verify_exponential(const RatFunc& a, int p, cplx C, int samples, double tol, std::uint64_t seed,
                                  cplx b_shift) {
    if (C == cplx(0)) throw DomainError("C must be nonzero");
    const cplx ppi(0.0, p * std::numbers::pi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    // |exp(p pi i z)| <= e^(pi/2) on this strip, so absolute residuals stay comparable across p.
    const double strip = p == 0 ? 2.0 : 0.5 / std::abs(p);
    std::uniform_real_distribution<double> v(-strip, strip);
    VerifierReport r;
    r.check = "exponential";
    r.tol = tol;
    r.params = {{"a", a.to_string()}, {"p", p}, {"C", cjson(C)}, {"b_shift", cjson(b_shift)}};
    int done = 0;
    for (int tries = 0; done < samples && tries < 100 * samples; ++tries) {
        const double x = u(rng);
        const cplx z(x, v(rng));
        cplx az;
        try {
            az = a.evaluate(z);
        } catch (const DomainError&) {
            continue;
        }
        if (!std::isfinite(std::abs(az)) || std::abs(az) > 1e8) continue;
        const cplx w = C * std::exp(ppi * z);
        const cplx dw = ppi * w;
        const cplx wp1 = C * std::exp(ppi * (z + 1.0)), wm1 = C * std::exp(ppi * (z - 1.0));
        const cplx b = ppi * az + b_shift;
        r.max_residual = std::max(r.max_residual, std::abs(wp1 - wm1 + az * dw / w - b));
        ++done;
    }
    r.samples = done;
    r.pass = done == samples && r.max_residual <= tol;
    return r;
}

double mkdv_residual(cplx lambda, cplx nu, cplx t, cplx w_minus, cplx w, cplx dw, cplx perturb) {
    const cplx arg = -2.0 * lambda * nu * t;
    if (std::abs(arg) == 0.0 || (arg.real() < 0 && std::abs(arg.imag()) <= 1e-12 * std::abs(arg)))
        throw DomainError("-2 lambda nu t lies on the branch cut of the square root");
    const cplx s = 1.0 / std::sqrt(arg);
    const cplx w_plus = w_minus + lambda * (dw + nu * w) / (w * w) + perturb;
    // v = s(t) w(z(x,t)); ds/dt = -s/(2t); dz/dt = -1/(2 nu t).
    const cplx vt = -s * w / (2.0 * t) - s * dw / (2.0 * nu * t);
    const cplx v = s * w;
    const cplx rhs = v * v * (s * w_plus - s * w_minus);
    return std::abs(vt - rhs);
}

VerifierReport mkdv_identity_check(cplx lambda, cplx nu, int samples, double tol, std::uint64_t seed, cplx perturb) {
    if (lambda * nu == cplx(0)) throw DomainError("lambda*nu != 0 is required for the mKdV reduction");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0), mag(0.5, 1.5), ang(0.0, 2.0 * std::numbers::pi);
    VerifierReport r;
    r.check = "mkdv";
    r.tol = tol;
    r.params = {{"lambda", cjson(lambda)}, {"nu", cjson(nu)}, {"perturb", cjson(perturb)}};
    int done = 0;
    for (int tries = 0; done < samples && tries < 100 * samples; ++tries) {
        const cplx t = std::polar(mag(rng), 0.5 * u(rng)) / (-2.0 * lambda * nu) * std::abs(-2.0 * lambda * nu);
        const cplx w = std::polar(mag(rng), ang(rng));
        const cplx w_minus(u(rng), u(rng)), dw(u(rng), u(rng));
        try {
            r.max_residual = std::max(r.max_residual, mkdv_residual(lambda, nu, t, w_minus, w, dw, perturb));
        } catch (const DomainError&) {
            continue;
        }
        ++done;
    }
    r.samples = done;
    r.pass = done == samples && r.max_residual <= tol;
    return r;
}

} // namespace ddelab
