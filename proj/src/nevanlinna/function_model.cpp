#include "ddelab/nevanlinna/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return out;
}

} // namespace

std::string model_kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::EllipticSolution: return "elliptic";
    case ModelKind::WpPower: return "wp-power";
    case ModelKind::Exponential: return "exponential";
    case ModelKind::RationalNumeric: return "rational";
    }
    return "?";
}

std::vector<cplx> lattice_points(cplx b1, cplx b2, double r) {
    const double area = std::abs((std::conj(b1) * b2).imag());
    if (area <= 0.0) throw DomainError("degenerate lattice basis");
    const double l1 = std::abs(b1);
    const long nmax = static_cast<long>(std::floor(r * l1 / area)) + 1;
    std::vector<cplx> out;
    for (long n = -nmax; n <= nmax; ++n) {
        const cplx nb = static_cast<double>(n) * b2;
        const double m0 = -(nb * std::conj(b1)).real() / (l1 * l1);
        const long lo = static_cast<long>(std::floor(m0 - r / l1)) - 1, hi = static_cast<long>(std::ceil(m0 + r / l1)) + 1;
        for (long m = lo; m <= hi; ++m) {
            const cplx p = static_cast<double>(m) * b1 + nb;
            if (std::abs(p) <= r) out.push_back(p);
        }
    }
    return out;
}

FunctionModel FunctionModel::elliptic(const EllipticParams& params) {
    FunctionModel f;
    f.kind_ = ModelKind::EllipticSolution;
    f.wp_ = std::make_shared<const Weierstrass>(params.g2, params.g3);
    f.ep_ = params;
    const WpValue v = f.wp_->eval(params.omega);
    if (v.pole) throw DomainError("Omega is a pole of p");
    f.p_omega_ = v.p;
    return f;
}

FunctionModel FunctionModel::wp_power(cplx g2, cplx g3, int k) {
    if (k < 1) throw DomainError("wp power must be >= 1");
    FunctionModel f;
    f.kind_ = ModelKind::WpPower;
    f.wp_ = std::make_shared<const Weierstrass>(g2, g3);
    f.power_ = k;
    return f;
}

FunctionModel FunctionModel::exponential(cplx C, cplx rho) {
    if (C == cplx(0)) throw DomainError("C must be nonzero");
    if (rho == cplx(0)) throw DomainError("rho must be nonzero");
    FunctionModel f;
    f.kind_ = ModelKind::Exponential;
    f.C_ = C;
    f.rho_ = rho;
    return f;
}

FunctionModel FunctionModel::rational(cplx lead, std::vector<PointMult> zeros, std::vector<PointMult> poles) {
    if (lead == cplx(0)) throw DomainError("leading coefficient must be nonzero");
    for (const auto& z : zeros)
        for (const auto& p : poles)
            if (std::abs(z.location - p.location) <= 1e-12 * (1.0 + std::abs(z.location)))
                throw DomainError("zero and pole coincide; cancel them first");
    for (const auto* list : {&zeros, &poles})
        for (const auto& pm : *list)
            if (pm.mult < 1) throw DomainError("multiplicities must be positive");
    FunctionModel f;
    f.kind_ = ModelKind::RationalNumeric;
    f.lead_ = lead;
    f.zeros_ = std::move(zeros);
    f.poles_ = std::move(poles);
    return f;
}

std::string FunctionModel::description() const {
    switch (kind_) {
    case ModelKind::EllipticSolution: return "alpha*(p(Omega*z) - p(Omega))";
    case ModelKind::WpPower: return power_ == 1 ? "p(z)" : "p(z)^" + std::to_string(power_);
    case ModelKind::Exponential: return "C*exp(rho*z)";
    case ModelKind::RationalNumeric: return "lead*prod(z - zeros)/prod(z - poles)";
    }
    return "?";
}

nlohmann::json FunctionModel::params_json() const {
    nlohmann::json j{{"kind", model_kind_name(kind_)}, {"form", description()}};
    switch (kind_) {
    case ModelKind::EllipticSolution:
        j["g2"] = cjson(ep_.g2);
        j["g3"] = cjson(ep_.g3);
        j["Omega"] = cjson(ep_.omega);
        j["lambda"] = cjson(ep_.lambda);
        j["alpha"] = cjson(ep_.alpha);
        break;
    case ModelKind::WpPower:
        j["g2"] = cjson(wp_->g2());
        j["g3"] = cjson(wp_->g3());
        j["power"] = power_;
        break;
    case ModelKind::Exponential:
        j["C"] = cjson(C_);
        j["rho"] = cjson(rho_);
        break;
    case ModelKind::RationalNumeric: {
        j["lead"] = cjson(lead_);
        auto list = [](const std::vector<PointMult>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& p : v) a.push_back({{"at", cjson(p.location)}, {"mult", p.mult}});
            return a;
        };
        j["zeros"] = list(zeros_);
        j["poles"] = list(poles_);
        break;
    }
    }
    return j;
}

double FunctionModel::log_abs(cplx z) const {
    switch (kind_) {
    case ModelKind::EllipticSolution: {
        const WpValue v = wp_->eval(ep_.omega * z);
        if (v.pole) return kInf;
        return std::log(std::abs(ep_.alpha * (v.p - p_omega_)));
    }
    case ModelKind::WpPower: {
        const WpValue v = wp_->eval(z);
        if (v.pole) return kInf;
        return power_ * std::log(std::abs(v.p));
    }
    case ModelKind::Exponential: return std::log(std::abs(C_)) + (rho_ * z).real();
    case ModelKind::RationalNumeric: {
        double acc = std::log(std::abs(lead_));
        for (const auto& p : zeros_) acc += p.mult * std::log(std::abs(z - p.location));
        for (const auto& p : poles_) acc -= p.mult * std::log(std::abs(z - p.location));
        return acc;
    }
    }
    return 0.0;
}

cplx FunctionModel::value(cplx z) const {
    switch (kind_) {
    case ModelKind::EllipticSolution: {
        const WpValue v = wp_->eval(ep_.omega * z);
        if (v.pole) throw DomainError("evaluation at a pole");
        return ep_.alpha * (v.p - p_omega_);
    }
    case ModelKind::WpPower: {
        const WpValue v = wp_->eval(z);
        if (v.pole) throw DomainError("evaluation at a pole");
        return std::pow(v.p, power_);
    }
    case ModelKind::Exponential: return C_ * std::exp(rho_ * z);
    case ModelKind::RationalNumeric: {
        cplx acc = lead_;
        for (const auto& p : zeros_) acc *= std::pow(z - p.location, p.mult);
        for (const auto& p : poles_) {
            if (z == p.location) throw DomainError("evaluation at a pole");
            acc /= std::pow(z - p.location, p.mult);
        }
        return acc;
    }
    }
    return 0.0;
}

std::pair<cplx, cplx> FunctionModel::lattice_basis() const {
    if (kind_ == ModelKind::EllipticSolution) return {wp_->period1() / ep_.omega, wp_->period2() / ep_.omega};
    if (kind_ == ModelKind::WpPower) return {wp_->period1(), wp_->period2()};
    throw DomainError("model has no period lattice");
}

std::vector<cplx> FunctionModel::translates(cplx base, double r) const {
    const auto [b1, b2] = lattice_basis();
    std::vector<cplx> out;
    for (const cplx& l : lattice_points(b1, b2, r + std::abs(base)))
        if (std::abs(base + l) <= r) out.push_back(base + l);
    return out;
}

std::vector<PointMult> FunctionModel::wp_preimages(cplx c) const {
    const cplx p1 = wp_->period1(), p2 = wp_->period2();
    std::vector<cplx> guesses;
    if (std::abs(c) > 1.0) guesses.push_back(1.0 / std::sqrt(c));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) guesses.push_back((i + 0.5) / 8.0 * p1 + (j + 0.5) / 8.0 * p2);
    const double tol = 1e-9 * (1.0 + std::abs(c));
    for (const cplx& g : guesses) {
        const cplx u = wp_->solve(c, g);
        const WpValue v = wp_->eval(u);
        if (v.pole || std::abs(v.p - c) > tol) continue;
        const cplx twice = wp_->reduce(2.0 * u);
        if (std::abs(twice) <= 1e-7 * std::abs(p1)) return {{u, 2}};
        return {{u, 1}, {wp_->reduce(-u), 1}};
    }
    throw DomainError("could not invert p at the requested value");
}

std::vector<PointMult> FunctionModel::poles(double r) const {
    std::vector<PointMult> out;
    switch (kind_) {
    case ModelKind::EllipticSolution:
    case ModelKind::WpPower: {
        const int mult = kind_ == ModelKind::WpPower ? 2 * power_ : 2;
        for (const cplx& p : translates(0.0, r)) out.push_back({p, mult});
        break;
    }
    case ModelKind::Exponential: break;
    case ModelKind::RationalNumeric:
        for (const auto& p : poles_)
            if (std::abs(p.location) <= r) out.push_back(p);
        break;
    }
    return out;
}

std::vector<PointMult> FunctionModel::a_points(cplx a, double r) const {
    std::vector<PointMult> out;
    switch (kind_) {
    case ModelKind::EllipticSolution: {
        const cplx target = p_omega_ + a / ep_.alpha;
        for (const auto& pre : wp_preimages(target))
            for (const cplx& z : translates(pre.location / ep_.omega, r)) out.push_back({z, pre.mult});
        break;
    }
    case ModelKind::WpPower: {
        std::vector<cplx> values;
        int mult = 1;
        if (a == cplx(0)) {
            values.push_back(0.0);
            mult = power_;
        } else {
            const cplx root = std::pow(a, 1.0 / power_);
            for (int j = 0; j < power_; ++j)
                values.push_back(root * std::polar(1.0, 2.0 * std::numbers::pi * j / power_));
        }
        for (const cplx& v : values)
            for (const auto& pre : wp_preimages(v))
                for (const cplx& z : translates(pre.location, r)) out.push_back({z, pre.mult * mult});
        break;
    }
    case ModelKind::Exponential: {
        if (a == cplx(0)) break;
        const cplx base = std::log(a / C_) / rho_;
        const cplx step = cplx(0.0, 2.0 * std::numbers::pi) / rho_;
        const long kmax = static_cast<long>(std::ceil((r + std::abs(base)) / std::abs(step)));
        for (long k = -kmax; k <= kmax; ++k) {
            const cplx z = base + static_cast<double>(k) * step;
            if (std::abs(z) <= r) out.push_back({z, 1});
        }
        break;
    }
    case ModelKind::RationalNumeric:
        if (a != cplx(0)) throw DomainError("rational models carry zero and pole inventories only");
        for (const auto& p : zeros_)
            if (std::abs(p.location) <= r) out.push_back(p);
        break;
    }
    return out;
}

std::vector<double> FunctionModel::default_radii() const {
    switch (kind_) {
    case ModelKind::EllipticSolution:
    case ModelKind::WpPower: {
        const auto [b1, b2] = lattice_basis();
        const double diam = std::max(std::abs(b1 + b2), std::abs(b1 - b2));
        // Offset so that no grid radius is a lattice-vector length.
        return log_spaced(2.0137 * diam, 20.0137 * diam, 24);
    }
    case ModelKind::Exponential: {
        const double s = 1.0 / std::abs(rho_);
        return log_spaced(1e3 * s, 1e9 * s, 24);
    }
    case ModelKind::RationalNumeric: {
        double far = 1.0;
        for (const auto* list : {&zeros_, &poles_})
            for (const auto& p : *list) far = std::max(far, std::abs(p.location));
        return log_spaced(1e3 * far, 1e12 * far, 24);
    }
    }
    return {};
}

} // namespace ddelab
