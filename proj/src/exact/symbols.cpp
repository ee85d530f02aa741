#include "ddelab/exact/symbols.hpp"

#include <stdexcept>
#include <string>

namespace ddelab {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "z",  "zhat", "alpha", "K",  "lambda", "mu", "nu", "k",  "eps", "y0",
    "y1", "y2",   "y3",    "y4", "y5",     "y6", "y7", "y8", "y9",  "y10",
};

} // namespace

Var y_var(int j) {
    if (j < 0 || j > kMaxYIndex) throw std::out_of_range("y index " + std::to_string(j));
    return static_cast<Var>(index_of(Var::y0) + j);
}

std::string_view var_name(int index) { return kNames.at(static_cast<std::size_t>(index)); }

std::optional<int> var_index(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kNames[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

} // namespace ddelab
