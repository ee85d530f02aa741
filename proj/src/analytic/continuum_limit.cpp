#include "ddelab/analytic/continuum_limit.hpp"

#include <string>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

MPoly truncate_eps(const MPoly& p, int order) {
    std::vector<Term> kept;
    for (const Term& t : p.terms())
        if (t.exps[index_of(Var::eps)] < order) kept.push_back(t);
    return MPoly::from_terms(std::move(kept));
}

MPoly eps_pow(int k) { return MPoly::var(Var::eps).pow(static_cast<unsigned>(k)); }

} // namespace

const MPoly& DiffPoly::coefficient(int k) const {
    if (k < 0 || k >= truncation)
        throw TruncationError("eps^" + std::to_string(k) + " is beyond the truncation " + std::to_string(truncation));
    return coeffs[static_cast<std::size_t>(k)];
}

int DiffPoly::leading_order() const {
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) return static_cast<int>(k);
    return -1;
}

MPoly DiffPoly::as_poly() const {
    MPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k] * eps_pow(static_cast<int>(k));
    return out;
}

nlohmann::json DiffPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) terms.push_back({{"eps_power", k}, {"coefficient", coeffs[k].to_string()}});
    return {{"truncation", truncation}, {"leading_order", leading_order()}, {"terms", terms}};
}

DiffPoly continuum_limit(int truncation, bool lambda_correction) {
    // w(z +- 1) needs y_j up to j = truncation - 3.
    if (truncation < kMinContinuumTruncation)
        throw DomainError("truncation " + std::to_string(truncation) + " cannot certify the eps^5 coefficient (need >= " +
                          std::to_string(kMinContinuumTruncation) + ")");
    if (truncation - 3 > kMaxYIndex)
        throw DomainError("truncation " + std::to_string(truncation) + " needs y_j beyond y" +
                          std::to_string(kMaxYIndex));
    const int T = truncation;
    MPoly shift_sum;  // sum_j y_j eps^j / j!, odd j only (the even part cancels in the difference)
    GaussianRational fact(1);
    for (int j = 0; j + 2 < T; ++j) {
        if (j > 0) fact = fact * GaussianRational(j);
        if (j % 2 == 1) shift_sum += MPoly::var(y_var(j)) * eps_pow(j) * (GaussianRational(1) / fact);
    }
    // w(z+1) - w(z-1) = -2 eps^2 * (odd part)
    const MPoly lhs = truncate_eps(shift_sum * eps_pow(2) * GaussianRational(-2), T);

    const MPoly y0 = MPoly::var(Var::y0);
    const MPoly w = MPoly(1) - eps_pow(2) * y0;
    const MPoly dw = -(eps_pow(3) * MPoly::var(y_var(1)));
    MPoly lambda(2);
    if (lambda_correction) lambda += MPoly::var(Var::lambda) * MPoly::var(Var::eps);
    const MPoly lambda_nu = eps_pow(5) * GaussianRational(Rational(-1, 3));

    // 1/w^2 = sum_k (k+1) (eps^2 y0)^k
    MPoly inv_w2;
    for (int k = 0; 2 * k < T; ++k)
        inv_w2 += (eps_pow(2) * y0).pow(static_cast<unsigned>(k)) * GaussianRational(k + 1);
    const MPoly rhs = truncate_eps(truncate_eps(lambda * dw + lambda_nu * w, T) * inv_w2, T);

    const MPoly diff = lhs - rhs;
    DiffPoly out;
    out.truncation = T;
    const std::vector<MPoly> by_eps = diff.coefficients_in(Var::eps);
    out.coeffs.assign(static_cast<std::size_t>(T), MPoly());
    for (std::size_t k = 0; k < by_eps.size() && k < out.coeffs.size(); ++k) out.coeffs[k] = by_eps[k];
    return out;
}

} // namespace ddelab
