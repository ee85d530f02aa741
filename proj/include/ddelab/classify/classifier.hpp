#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/model/equation.hpp"

namespace ddelab {

enum class Outcome { ConsistentBranchA, ConsistentBranchB, ViolatesNecessaryCondition, HypothesisViolation };

std::string outcome_name(Outcome o);

/// (lambda, mu, nu) of the inverse-square normal form
///   w(z+1) - w(z-1) = ((lambda + mu z) w' + (nu lambda + mu (nu z - 1)) w) / w^2.
struct NormalFormParams {
    GaussianRational lambda, mu, nu;
    friend bool operator==(const NormalFormParams&, const NormalFormParams&) = default;
};

/// Necessary-condition verdict. A "violation" reads contrapositively: no
/// non-rational meromorphic solution of the stated slow growth can exist.
struct Verdict {
    EqClass cls = EqClass::LogDeriv;
    Outcome outcome = Outcome::ViolatesNecessaryCondition;
    bool branch_a = false;
    bool branch_b = false;
    std::vector<std::string> failed_hypotheses;
    /// First failing condition for ViolatesNecessaryCondition.
    std::string failed_condition;
    std::vector<std::string> notes;
    std::optional<DegreeReport> degrees;
    std::optional<NormalFormParams> params;
    /// Integer p with b/a = p*pi*i numerically, for the pure log-derivative class.
    std::optional<int> exponential_p;

    std::string summary() const;
    nlohmann::json to_json() const;
};

/// Degree condition for w(z+1) - w(z-1) + a w'/w = P/Q: branch A when
/// deg P = deg Q + 1 <= 3, branch B when P/Q has degree 0 or 1 in w.
Verdict log_deriv_verdict(const DelayDiffEq& eq);

/// Constancy of a and b for w(z+1) - w(z-1) + a w'/w = b. Also flags
/// b = p*pi*i*a numerically (relative tolerance 1e-12, |p| <= 64).
Verdict pure_log_deriv_verdict(const DelayDiffEq& eq);

/// Normal-form test for the inverse-square class: c = 0, a affine and
/// b = nu*a - mu for a constant nu.
Verdict inverse_square_verdict(const DelayDiffEq& eq);

/// Dispatches on the equation class.
Verdict classify(const DelayDiffEq& eq);

/// The inverse-square equation with the given parameters.
DelayDiffEq build_normal_form(const GaussianRational& lambda, const GaussianRational& mu, const GaussianRational& nu);

/// Numeric p with r = p*pi*i within relative tolerance, 0 < |p| <= max_p.
std::optional<int> detect_pi_i_multiple(std::complex<double> r, double rel_tol = 1e-12, int max_p = 64);

} // namespace ddelab
