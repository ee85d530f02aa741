#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ddelab {

// The session symbol table is fixed: every symbol any module may need is
// registered up front, so exponent vectors never have to be re-embedded.
//
//   z                 independent variable of coefficient functions
//   zhat              symbolic base point of a local expansion
//   alpha, K          seed data (leading coefficient, regular value)
//   lambda, mu, nu, k parameters of the inverse-square normal form
//   eps, y0..y10      continuum-limit scaling parameter and derivatives of y
enum class Var : std::uint8_t {
    z = 0,
    zhat,
    alpha,
    K,
    lambda,
    mu,
    nu,
    k,
    eps,
    y0,
};

inline constexpr int kNumVars = 20;
inline constexpr int kMaxYIndex = kNumVars - static_cast<int>(Var::y0) - 1;

using Monomial = std::array<std::uint16_t, kNumVars>;

constexpr int index_of(Var v) { return static_cast<int>(v); }

Var y_var(int j);
std::string_view var_name(int index);
std::optional<int> var_index(std::string_view name);

} // namespace ddelab
