#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ddelab/analytic/weierstrass.hpp"
#include "ddelab/exact/ratfunc.hpp"

namespace ddelab {

struct VerifierReport {
    std::string check;
    nlohmann::json params;
    int samples = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Parameters of w(z) = alpha (p(Omega z) - p(Omega)), a solution of
/// w(z+1) - w(z-1) = lambda w'/w^2 when alpha^2 = -lambda Omega / p'(Omega).
struct EllipticParams {
    cplx g2, g3, omega, lambda;
    cplx alpha;
    /// +1 for the principal square root, -1 for its negative.
    int alpha_sign = 1;
    /// Negative control: alpha^2 = +lambda Omega / p'(Omega) instead.
    bool flipped = false;
};

/// Computes alpha; throws DomainError when p'(Omega) vanishes or Omega is a pole.
EllipticParams make_elliptic_params(cplx g2, cplx g3, cplx omega, cplx lambda, int alpha_sign = 1,
                                    bool flipped = false);

/// Max relative residual |LHS - RHS| / (1 + |w(z+1)| + |w(z-1)| + |RHS|) over
/// random sample points kept away from poles and zeros.
VerifierReport verify_elliptic_family(const EllipticParams& params, int samples, double tol,
                                      std::uint64_t seed = 1);

/// Residual of w(z+1) - w(z-1) + a w'/w - b for w = C exp(p pi i z) and
/// b = p pi i a + b_shift, at random points with |Re z| <= 2 and |Im z| <= 1/(2|p|).
VerifierReport verify_exponential(const RatFunc& a, int p, cplx C, int samples, double tol = 1e-10,
                                  std::uint64_t seed = 1, cplx b_shift = 0);

/// Residual of the mKdV equation v_t = v^2 (v(x+1) - v(x-1)) for
/// v = (-2 lambda nu t)^(-1/2) w(z), z = x - log(t)/(2 nu), where w(z+1) is
/// defined from random w(z-1), w, w' through the inverse-square normal form
/// with mu = 0 (plus `perturb`).
VerifierReport mkdv_identity_check(cplx lambda, cplx nu, int samples, double tol = 1e-12, std::uint64_t seed = 1,
                                   cplx perturb = 0);

/// One sample of the mKdV residual; throws DomainError when -2 lambda nu t
/// lies on the branch cut of the principal square root.
double mkdv_residual(cplx lambda, cplx nu, cplx t, cplx w_minus, cplx w, cplx dw, cplx perturb = 0);

} // namespace ddelab
