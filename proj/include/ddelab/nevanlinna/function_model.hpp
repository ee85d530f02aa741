#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/analytic/verifiers.hpp"
#include "ddelab/analytic/weierstrass.hpp"

namespace ddelab {

struct PointMult {
    cplx location;
    int mult = 1;
};

enum class ModelKind { EllipticSolution, WpPower, Exponential, RationalNumeric };

std::string model_kind_name(ModelKind k);

/// Closed-form meromorphic function with exact pole and a-point inventories.
///
///   EllipticSolution  w(z) = alpha (p(Omega z) - p(Omega))
///   WpPower           p(z)^k
///   Exponential       C exp(rho z)
///   RationalNumeric   lead * prod (z - zeros) / prod (z - poles)
class FunctionModel {
public:
    static FunctionModel elliptic(const EllipticParams& params);
    static FunctionModel wp_power(cplx g2, cplx g3, int k);
    static FunctionModel exponential(cplx C, cplx rho);
    static FunctionModel rational(cplx lead, std::vector<PointMult> zeros, std::vector<PointMult> poles);

    ModelKind kind() const { return kind_; }
    std::string description() const;
    nlohmann::json params_json() const;

    /// log|f(z)|; -inf at zeros, +inf at poles.
    double log_abs(cplx z) const;
    /// Throws DomainError at a pole.
    cplx value(cplx z) const;

    /// Poles in |z| <= r, with multiplicity.
    std::vector<PointMult> poles(double r) const;
    /// Solutions of f(z) = a in |z| <= r, with multiplicity.
    std::vector<PointMult> a_points(cplx a, double r) const;

    /// Lattice of poles in the z-plane (elliptic kinds only).
    std::pair<cplx, cplx> lattice_basis() const;
    /// Radii sampling the model's growth; 24 logarithmically spaced values.
    std::vector<double> default_radii() const;

private:
    ModelKind kind_ = ModelKind::RationalNumeric;
    std::shared_ptr<const Weierstrass> wp_;
    EllipticParams ep_{};
    cplx p_omega_{};
    int power_ = 1;
    cplx C_{1.0}, rho_{1.0};
    cplx lead_{1.0};
    std::vector<PointMult> zeros_, poles_;

    /// Translates base + lattice with |z| <= r.
    std::vector<cplx> translates(cplx base, double r) const;
    /// Roots of p(u) = c in the reduced cell, as (u, multiplicity) pairs mod the lattice.
    std::vector<PointMult> wp_preimages(cplx c) const;
};

/// Lattice points m*b1 + n*b2 with |point| <= r.
std::vector<cplx> lattice_points(cplx b1, cplx b2, double r);

} // namespace ddelab
