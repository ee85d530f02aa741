#include "ddelab/classify/classifier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ddelab/exact/errors.hpp"
#include "ddelab/model/dd_polynomial.hpp"

namespace ddelab {

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::ConsistentBranchA: return "ConsistentBranchA";
    case Outcome::ConsistentBranchB: return "ConsistentBranchB";
    case Outcome::ViolatesNecessaryCondition: return "ViolatesNecessaryCondition";
    case Outcome::HypothesisViolation: return "HypothesisViolation";
    }
    return "?";
}

std::string Verdict::summary() const {
    std::ostringstream os;
    os << outcome_name(outcome);
    if (outcome == Outcome::HypothesisViolation) {
        os << " (";
        for (std::size_t i = 0; i < failed_hypotheses.size(); ++i) os << (i ? "; " : "") << failed_hypotheses[i];
        os << ')';
    }
    if (!failed_condition.empty()) os << ": " << failed_condition;
    if (params)
        os << " lambda=" << params->lambda.to_string(false) << " mu=" << params->mu.to_string(false)
           << " nu=" << params->nu.to_string(false);
    return os.str();
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json j{{"class", class_name(cls)},
                     {"outcome", outcome_name(outcome)},
                     {"branch_a", branch_a},
                     {"branch_b", branch_b}};
    if (!failed_hypotheses.empty()) j["failed_hypotheses"] = failed_hypotheses;
    if (!failed_condition.empty()) j["failed_condition"] = failed_condition;
    if (degrees) j["degrees"] = {{"P", degrees->deg_p}, {"Q", degrees->deg_q}, {"R", degrees->deg_r}};
    if (params)
        j["params"] = {{"lambda", params->lambda.to_string(false)},
                       {"mu", params->mu.to_string(false)},
                       {"nu", params->nu.to_string(false)}};
    if (exponential_p) j["exponential_p"] = *exponential_p;
    j["notes"] = notes;
    return j;
}

namespace {

void require_nonzero_a(const DelayDiffEq& eq) {
    if (eq.a.is_zero()) throw DomainError("a(z) ≡ 0 violates the " + class_name(eq.cls) + " hypothesis a(z) ≢ 0");
}

void require_class(const DelayDiffEq& eq, EqClass c) {
    if (eq.cls != c) throw DomainError("verdict for class " + class_name(c) + " applied to " + class_name(eq.cls));
}

} // namespace

std::optional<int> detect_pi_i_multiple(std::complex<double> r, double rel_tol, int max_p) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()) || std::abs(r) == 0.0) return std::nullopt;
    const double p = std::round(r.imag() / std::numbers::pi);
    if (p == 0.0 || std::abs(p) > max_p) return std::nullopt;
    const std::complex<double> target(0.0, p * std::numbers::pi);
    if (std::abs(r - target) > rel_tol * std::abs(target)) return std::nullopt;
    return static_cast<int>(p);
}

Verdict log_deriv_verdict(const DelayDiffEq& eq) {
    require_class(eq, EqClass::LogDeriv);
    Verdict v;
    v.cls = eq.cls;
    if (!eq.Q.is_monic()) v.failed_hypotheses.push_back("Q is not monic in w");
    if (eq.Q.coeff(0).is_zero()) v.failed_hypotheses.push_back("Q(z,0) ≡ 0");
    if (eq.q_factors.residual)
        v.failed_hypotheses.push_back("Q has a factor " + eq.q_factors.residual->to_string() +
                                      " without roots certified rational in z");
    if (!(eq.q_factors.expand() == eq.Q)) v.failed_hypotheses.push_back("factorization does not reconstruct Q");

    // Common roots, decided twice: by the resultant and by substituting the roots.
    const bool res_zero = frac_is_zero(resultant_in_w(eq.P, eq.Q));
    bool root_of_p = false;
    for (const auto& f : eq.q_factors.factors) root_of_p = root_of_p || eq.P.evaluate(f.root).is_zero();
    if (res_zero) v.failed_hypotheses.push_back("P and Q have a common root");
    if (res_zero != root_of_p && !eq.q_factors.residual)
        throw std::logic_error("resultant and root substitution disagree on common roots");

    // Rational candidates w = b_j are not solutions iff the cleared form does not vanish on them.
    const DDPolynomial cleared = cleared_form(eq);
    for (const auto& f : eq.q_factors.factors) {
        const bool solves = frac_is_zero(substitute_rational(cleared, f.root).value());
        v.notes.push_back("root " + f.root.to_string() + (solves ? " solves the equation" : " is not a solution"));
    }

    const DegreeReport d = mohonko_degree(eq);
    v.degrees = d;
    if (!v.failed_hypotheses.empty()) {
        v.outcome = Outcome::HypothesisViolation;
        return v;
    }
    v.branch_a = d.deg_p == d.deg_q + 1 && d.deg_p <= 3;
    v.branch_b = d.deg_r <= 1;
    if (v.branch_a && v.branch_b) v.notes.push_back("both degree branches hold");
    if (v.branch_a) {
        v.outcome = Outcome::ConsistentBranchA;
    } else if (v.branch_b) {
        v.outcome = Outcome::ConsistentBranchB;
    } else {
        v.outcome = Outcome::ViolatesNecessaryCondition;
        v.failed_condition = "deg P = " + std::to_string(d.deg_p) + ", deg Q = " + std::to_string(d.deg_q) +
                             ": neither deg P = deg Q + 1 <= 3 nor deg R <= 1; any non-rational meromorphic "
                             "solution has hyper-order at least one";
    }
    return v;
}

Verdict pure_log_deriv_verdict(const DelayDiffEq& eq) {
    require_class(eq, EqClass::PureLogDeriv);
    require_nonzero_a(eq);
    Verdict v;
    v.cls = eq.cls;
    const RatFunc ratio = eq.b / eq.a;
    if (ratio.is_constant() && !ratio.is_zero()) {
        if (auto num = ratio.as_number()) {
            if (auto p = detect_pi_i_multiple(num->to_complex())) {
                v.exponential_p = *p;
                v.notes.push_back("b/a = " + std::to_string(*p) +
                                  "*pi*i numerically: the exponential family w = C exp(" + std::to_string(*p) +
                                  "*pi*i*z) exists; it has no zeros and evades the zero-density hypothesis");
            }
        }
    }
    if (eq.a_constant() && eq.b_constant()) {
        v.outcome = Outcome::ConsistentBranchA;
        v.branch_a = true;
    } else {
        v.outcome = Outcome::ViolatesNecessaryCondition;
        v.failed_condition = !eq.a_constant() ? "a is not constant" : "b is not constant";
        v.failed_condition += "; no non-rational solution of hyper-order < 1 with enough simple zeros exists";
    }
    return v;
}

Verdict inverse_square_verdict(const DelayDiffEq& eq) {
    require_class(eq, EqClass::InverseSquare);
    require_nonzero_a(eq);
    Verdict v;
    v.cls = eq.cls;
    v.outcome = Outcome::ViolatesNecessaryCondition;
    if (!eq.c.is_zero()) {
        v.failed_condition = "c ≢ 0";
        return v;
    }
    const RatFunc second = rf_shift(eq.a, 2) - RatFunc(2) * rf_shift(eq.a, 1) + eq.a;
    const RatFunc mu_f = eq.a.derive();
    if (!second.is_zero() || !mu_f.as_number()) {
        v.failed_condition = "a is not affine: a(z+2) - 2a(z+1) + a(z) = " + second.to_string();
        return v;
    }
    const GaussianRational mu = *mu_f.as_number();
    auto lambda = (eq.a - RatFunc(mu) * RatFunc::z()).as_number();
    if (!lambda) throw std::logic_error("affine coefficient without a constant term");
    const RatFunc nu_f = (eq.b + RatFunc(mu)) / eq.a;
    auto nu = nu_f.as_number();
    if (!nu) {
        v.failed_condition = "b - nu*a + mu ≢ 0 for every constant nu: (b + mu)/a = " + nu_f.to_string();
        return v;
    }
    v.outcome = Outcome::ConsistentBranchA;
    v.branch_a = true;
    v.params = NormalFormParams{*lambda, mu, *nu};
    return v;
}

Verdict classify(const DelayDiffEq& eq) {
    switch (eq.cls) {
    case EqClass::LogDeriv: return log_deriv_verdict(eq);
    case EqClass::PureLogDeriv: return pure_log_deriv_verdict(eq);
    case EqClass::InverseSquare: return inverse_square_verdict(eq);
    }
    throw DomainError("unknown equation class");
}

DelayDiffEq build_normal_form(const GaussianRational& lambda, const GaussianRational& mu, const GaussianRational& nu) {
    const RatFunc z = RatFunc::z();
    RatFunc a = RatFunc(lambda) + RatFunc(mu) * z;
    RatFunc b = RatFunc(nu * lambda) + RatFunc(mu) * (RatFunc(nu) * z - RatFunc(1));
    return DelayDiffEq::inverse_square(a, b, RatFunc(0));
}

} // namespace ddelab
