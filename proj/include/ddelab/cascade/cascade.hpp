#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/model/equation.hpp"

namespace ddelab {

enum class SeedKind { ZeroOfW, ZeroOfWMinusB, PoleOfW };

std::string seed_kind_name(SeedKind k);
std::optional<SeedKind> seed_kind_from_name(const std::string& name);

/// Recipe for the initial window; kept so the window can be rebuilt at a
/// larger truncation.
struct SeedSpec {
    SeedKind kind = SeedKind::ZeroOfW;
    int p = 1;
    /// Value of w at zhat - 1; the symbol K unless given.
    FieldElem regular_value = FieldElem::var(Var::K);
    /// Leading coefficient at zhat; the symbol alpha unless given.
    FieldElem leading = FieldElem::var(Var::alpha);
    /// The function whose graph w meets, for ZeroOfWMinusB.
    RatFunc b;
};

/// Local expansions of w at zhat + j, all in t = z - zhat.
struct LocalData {
    std::map<int, LaurentSeries> window;
    std::optional<SeedSpec> origin;
    int truncation = kDefaultTruncation;
};

LocalData seed_local_data(const SeedSpec& spec, int truncation = kDefaultTruncation);

/// Expansion of w at zhat + j + 1 from those at zhat + j - 1 and zhat + j.
LaurentSeries cascade_step(const DelayDiffEq& eq, const LocalData& state, int j);

struct PatternEntry {
    int offset = 0;
    bool certified = false;
    int order = 0;
    FieldElem leading;
    LaurentSeries series;
    std::string note;
};

struct SingularityPattern {
    std::vector<PatternEntry> entries;
    /// Seed window used for the final run (offsets -1 and 0).
    std::map<int, LaurentSeries> seed;
    int truncation = kDefaultTruncation;
    bool backward = false;
    std::string failure;

    const PatternEntry* at(int offset) const;
    std::size_t certified_count() const;
    nlohmann::json to_json() const;
};

/// Symbolic coefficients swell quickly with the series length, so cascades
/// start short and rely on the adaptive doubling.
inline constexpr int kCascadeStartTruncation = 4;

struct CascadeOptions {
    int truncation = kCascadeStartTruncation;
    int max_truncation = kMaxTruncation;
    /// Run on the mirrored equation, i.e. follow the chain towards zhat - 1, zhat - 2, ...
    bool backward = false;
};

/// Iterates the equation for offsets 1..steps. On a certification failure the
/// truncation is doubled and the run replayed, up to max_truncation; past the
/// cap the run stops with an uncertified entry.
SingularityPattern run_cascade(const DelayDiffEq& eq, const SeedSpec& seed, int steps,
                               const CascadeOptions& opts = {});
SingularityPattern run_cascade(const DelayDiffEq& eq, const LocalData& seed, int steps,
                               const CascadeOptions& opts = {});

/// Coefficient of 1/t when w = A(z)/t^2 + B(z)/t + O(1) is written with
/// coefficient functions of z rather than zhat: B(zhat) = c_{-1} - d/dzhat c_{-2}.
FieldElem mixed_simple_pole_coefficient(const LaurentSeries& s);

/// Literal closed form of the simple-pole obstruction for the inverse-square
/// class with c = 0. Throws DomainError when a(z) - 2a(z+1) vanishes identically.
RatFunc gamma_of(const RatFunc& a, const RatFunc& b);

struct BlowupReport {
    std::vector<int> orders;
    int degree = 0;
    /// Every consecutive ratio equals the degree of P.
    bool geometric = false;
};

/// Pole orders at offsets 1..steps seeded by a pole of order q at zhat, for
/// the log-deriv class with polynomial right-hand side.
BlowupReport polynomial_blowup(const DelayDiffEq& eq, int steps, int q = 1, const CascadeOptions& opts = {});

} // namespace ddelab
