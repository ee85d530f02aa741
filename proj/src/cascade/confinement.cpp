#include "ddelab/cascade/confinement.hpp"

#include <sstream>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

std::string confinement_kind_name(ConfinementKind k) {
    switch (k) {
    case ConfinementKind::ConfinedAt: return "ConfinedAt";
    case ConfinementKind::SimplePoleTail: return "SimplePoleTail";
    case ConfinementKind::BoundedPoleChain: return "BoundedPoleChain";
    case ConfinementKind::ExponentialOrderGrowth: return "ExponentialOrderGrowth";
    }
    return "?";
}

std::string ConfinementVerdict::summary() const {
    std::ostringstream os;
    os << confinement_kind_name(kind);
    if (kind == ConfinementKind::ConfinedAt) os << '(' << offset << ')';
    if (kind == ConfinementKind::ExponentialOrderGrowth) os << '(' << ratio << ')';
    for (const auto& w : witnesses)
        os << "; " << w.name << (w.vanishes ? " = 0" : " = " + w.value.to_string());
    return os.str();
}

nlohmann::json ConfinementVerdict::to_json() const {
    nlohmann::json j{{"kind", confinement_kind_name(kind)}};
    if (kind == ConfinementKind::ConfinedAt || kind == ConfinementKind::SimplePoleTail) j["offset"] = offset;
    if (kind == ConfinementKind::ExponentialOrderGrowth) j["ratio"] = ratio;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : witnesses)
        ws.push_back({{"name", w.name}, {"value", w.value.to_string()}, {"vanishes", w.vanishes}});
    j["witnesses"] = ws;
    return j;
}

namespace {

Witness make_witness(std::string name, FieldElem v) {
    const bool zero = frac_is_zero(v);
    return {std::move(name), std::move(v), zero};
}

/// Witnesses tied to the inverse-square resonance: the second difference of a
/// at zhat and the closed-form simple-pole obstruction.
void inverse_square_witnesses(const DelayDiffEq& eq, std::vector<Witness>& out) {
    const RatFunc second = rf_shift(eq.a, 2) - RatFunc(2) * rf_shift(eq.a, 1) + eq.a;
    out.push_back(make_witness("a(zhat+2) - 2a(zhat+1) + a(zhat)", second.at_base(0)));
    if (eq.c.is_zero()) {
        try {
            out.push_back(make_witness("gamma(zhat)", gamma_of(eq.a, eq.b).at_base(0)));
        } catch (const DomainError&) {
            // a(z) - 2a(z+1) vanishes; the cascade coefficients below still decide.
        }
    }
}

} // namespace

ConfinementVerdict confinement_report(const SingularityPattern& pattern, const DelayDiffEq& eq) {
    std::vector<const PatternEntry*> es;
    for (const auto& e : pattern.entries) {
        if (!e.certified) break;
        es.push_back(&e);
    }
    if (es.size() < 3) throw DomainError("insufficient certified entries for a confinement verdict");

    ConfinementVerdict v;

    // Geometric growth of the initial chain of poles.
    std::size_t chain = 0;
    while (chain < es.size() && es[chain]->order < 0) ++chain;
    if (chain >= 3 && es[0]->order != 0 && es[1]->order % es[0]->order == 0) {
        const int d = es[1]->order / es[0]->order;
        bool constant = d >= 2;
        for (std::size_t i = 1; constant && i + 1 < chain; ++i)
            constant = es[i + 1]->order == d * es[i]->order;
        if (constant) {
            v.kind = ConfinementKind::ExponentialOrderGrowth;
            v.ratio = d;
            v.witnesses.push_back(make_witness("leading coefficient at offset " + std::to_string(es[chain - 1]->offset),
                                               es[chain - 1]->leading));
            return v;
        }
    }

    int min_pole = 0;
    bool seen_pole = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const PatternEntry& e = *es[i];
        if (e.order < 0) {
            seen_pole = true;
            min_pole = std::min(min_pole, e.order);
            continue;
        }
        if (!seen_pole || i == 0 || e.order != 0 || es[i - 1]->order < 0) continue;
        v.kind = ConfinementKind::ConfinedAt;
        v.offset = e.offset;
        if (eq.cls == EqClass::InverseSquare) inverse_square_witnesses(eq, v.witnesses);
        for (int k = min_pole; k < 0; ++k)
            v.witnesses.push_back(make_witness("coefficient of t^" + std::to_string(k) + " at offset " +
                                                   std::to_string(e.offset),
                                               e.series.coeff(k)));
        return v;
    }

    // Poles that come back after the chain went through finite values.
    bool finite_seen = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const PatternEntry& e = *es[i];
        if (e.order >= 0) {
            finite_seen = seen_pole;
            continue;
        }
        if (!finite_seen || e.order != -1) continue;
        v.kind = ConfinementKind::SimplePoleTail;
        v.offset = e.offset;
        const FieldElem alpha = pattern.seed.count(0) ? pattern.seed.at(0).leading() : FieldElem(1);
        if (eq.cls == EqClass::InverseSquare) {
            inverse_square_witnesses(eq, v.witnesses);
            v.witnesses.push_back(make_witness("leading(seed) * residue at offset " + std::to_string(e.offset),
                                               alpha * e.leading));
        } else {
            v.witnesses.push_back(make_witness("residue at offset " + std::to_string(e.offset), e.leading));
        }
        return v;
    }

    v.kind = ConfinementKind::BoundedPoleChain;
    v.witnesses.push_back(make_witness("leading coefficient at offset " + std::to_string(es.back()->offset),
                                       es.back()->leading));
    return v;
}

} // namespace ddelab
