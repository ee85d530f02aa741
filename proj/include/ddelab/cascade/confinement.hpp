#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/cascade/cascade.hpp"

namespace ddelab {

enum class ConfinementKind { ConfinedAt, SimplePoleTail, BoundedPoleChain, ExponentialOrderGrowth };

std::string confinement_kind_name(ConfinementKind k);

struct Witness {
    std::string name;
    FieldElem value;
    bool vanishes = false;
};

struct ConfinementVerdict {
    ConfinementKind kind = ConfinementKind::BoundedPoleChain;
    /// Offset of confinement for ConfinedAt, of the first recurring pole for SimplePoleTail.
    int offset = 0;
    /// Order ratio for ExponentialOrderGrowth.
    int ratio = 0;
    std::vector<Witness> witnesses;

    std::string summary() const;
    nlohmann::json to_json() const;
};

/// Reads the fate of the pole chain off a pattern with at least three
/// certified entries:
///  - ExponentialOrderGrowth(d) when the leading pole orders grow by a
///    constant integer factor d >= 2 over at least three entries;
///  - ConfinedAt(j) at the first j >= 2 after a pole where w is finite and
///    nonzero and w at j - 1 is finite;
///  - SimplePoleTail when simple poles reappear after the chain has passed
///    through finite values;
///  - BoundedPoleChain otherwise.
ConfinementVerdict confinement_report(const SingularityPattern& pattern, const DelayDiffEq& eq);

} // namespace ddelab
