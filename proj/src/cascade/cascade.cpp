#include "ddelab/cascade/cascade.hpp"

#include "ddelab/exact/errors.hpp"

namespace ddelab {

std::string seed_kind_name(SeedKind k) {
    switch (k) {
    case SeedKind::ZeroOfW: return "zero_of_w";
    case SeedKind::ZeroOfWMinusB: return "zero_of_w_minus_b";
    case SeedKind::PoleOfW: return "pole_of_w";
    }
    return "?";
}

std::optional<SeedKind> seed_kind_from_name(const std::string& name) {
    if (name == "zero_of_w") return SeedKind::ZeroOfW;
    if (name == "zero_of_w_minus_b") return SeedKind::ZeroOfWMinusB;
    if (name == "pole_of_w") return SeedKind::PoleOfW;
    return std::nullopt;
}

LocalData seed_local_data(const SeedSpec& spec, int truncation) {
    if (spec.p <= 0) throw DomainError("seed order p must be a positive integer");
    if (spec.leading.is_zero()) throw DomainError("seed leading coefficient must be nonzero");
    LocalData d;
    d.origin = spec;
    d.truncation = truncation;
    d.window[-1] = spec.regular_value.is_zero() ? LaurentSeries::zero_to(truncation, -1)
                                                : LaurentSeries::monomial(spec.regular_value, 0, truncation, -1);
    switch (spec.kind) {
    case SeedKind::ZeroOfW: d.window[0] = LaurentSeries::monomial(spec.leading, spec.p, truncation, 0); break;
    case SeedKind::PoleOfW: d.window[0] = LaurentSeries::monomial(spec.leading, -spec.p, truncation, 0); break;
    case SeedKind::ZeroOfWMinusB:
        d.window[0] = (taylor_at(spec.b, 0, truncation + spec.p) +
                       LaurentSeries::monomial(spec.leading, spec.p, truncation, 0))
                          .with_offset(0);
        break;
    }
    return d;
}

LaurentSeries cascade_step(const DelayDiffEq& eq, const LocalData& state, int j) {
    auto prev = state.window.find(j - 1), cur = state.window.find(j);
    if (prev == state.window.end() || cur == state.window.end())
        throw DomainError("cascade window lacks offsets " + std::to_string(j - 1) + " and " + std::to_string(j));
    LaurentSeries next = prev->second + eq.rhs_series(cur->second, j, state.truncation);
    // Forces the certification check: a series with no surviving coefficient
    // has no certified order.
    (void)next.order();
    return next.with_offset(j + 1);
}

const PatternEntry* SingularityPattern::at(int offset) const {
    for (const auto& e : entries)
        if (e.offset == offset) return &e;
    return nullptr;
}

std::size_t SingularityPattern::certified_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.certified ? 1 : 0;
    return n;
}

nlohmann::json SingularityPattern::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j{{"offset", e.offset}, {"certified", e.certified}};
        if (e.certified) {
            j["order"] = e.order;
            j["leading"] = e.leading.to_string();
        }
        if (!e.note.empty()) j["note"] = e.note;
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

struct Attempt {
    SingularityPattern pattern;
    bool truncation_failure = false;
};

Attempt run_once(const DelayDiffEq& eq, LocalData state, int steps) {
    Attempt a;
    a.pattern.truncation = state.truncation;
    a.pattern.seed = state.window;
    for (int j = 0; j < steps; ++j) {
        PatternEntry e;
        e.offset = j + 1;
        try {
            LaurentSeries next = cascade_step(eq, state, j);
            e.certified = true;
            e.order = next.order();
            e.leading = next.leading();
            e.series = next;
            state.window[j + 1] = std::move(next);
            a.pattern.entries.push_back(std::move(e));
        } catch (const TruncationError& err) {
            e.note = err.what();
            a.pattern.entries.push_back(std::move(e));
            a.pattern.failure = err.what();
            a.truncation_failure = true;
            return a;
        }
    }
    return a;
}

} // namespace

SingularityPattern run_cascade(const DelayDiffEq& eq, const LocalData& seed, int steps, const CascadeOptions& opts) {
    if (steps < 1) throw DomainError("cascade needs at least one step");
    const DelayDiffEq work = opts.backward ? eq.mirrored() : eq;
    LocalData state = seed;
    for (;;) {
        Attempt a = run_once(work, state, steps);
        a.pattern.backward = opts.backward;
        if (!a.truncation_failure || !state.origin) return a.pattern;
        if (state.truncation * 2 > opts.max_truncation) {
            a.pattern.failure += "; truncation cap " + std::to_string(opts.max_truncation) + " exhausted";
            return a.pattern;
        }
        state = seed_local_data(*state.origin, state.truncation * 2);
    }
}

SingularityPattern run_cascade(const DelayDiffEq& eq, const SeedSpec& seed, int steps, const CascadeOptions& opts) {
    return run_cascade(eq, seed_local_data(seed, opts.truncation), steps, opts);
}

FieldElem mixed_simple_pole_coefficient(const LaurentSeries& s) {
    return s.coeff(-1) - s.coeff(-2).derivative(Var::zhat);
}

RatFunc gamma_of(const RatFunc& a, const RatFunc& b) {
    const RatFunc a1 = rf_shift(a, 1), a2 = rf_shift(a, 2);
    const RatFunc d = a - RatFunc(2) * a1;
    if (d.is_zero()) throw DomainError("formula singular; use cascade directly");
    return (a * rf_shift(b, 2) - (RatFunc(2) * a1 - a) * b) / d -
           RatFunc(2) * a2 * (a * a1.derive() - a1 * a.derive()) / (d * d);
}

BlowupReport polynomial_blowup(const DelayDiffEq& eq, int steps, int q, const CascadeOptions& opts) {
    if (eq.cls != EqClass::LogDeriv || eq.Q.degree() > 0)
        throw DomainError("polynomial blowup needs the log-deriv class with a polynomial right-hand side");
    BlowupReport r;
    r.degree = std::max(eq.P.degree(), 0);
    SeedSpec seed;
    seed.kind = SeedKind::PoleOfW;
    seed.p = q;
    SingularityPattern pat = run_cascade(eq, seed, steps, opts);
    int prev = -q;
    r.geometric = r.degree >= 2;
    for (const auto& e : pat.entries) {
        if (!e.certified) {
            r.geometric = false;
            break;
        }
        r.orders.push_back(-e.order);
        if (e.order != prev * r.degree) r.geometric = false;
        prev = e.order;
    }
    return r;
}

} // namespace ddelab
