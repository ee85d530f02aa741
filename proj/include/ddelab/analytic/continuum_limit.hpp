#pragma once

#include <vector>

#include <json.hpp>

#include "ddelab/exact/mpoly.hpp"

namespace ddelab {

/// Polynomial in eps and y0..y10 (y_j is the j-th derivative of y(t)) with
/// exact coefficients, graded by the power of eps.
struct DiffPoly {
    /// Powers of eps below this are exact.
    int truncation = 0;
    /// coeffs[k] is the coefficient of eps^k, free of eps.
    std::vector<MPoly> coeffs;

    const MPoly& coefficient(int k) const;
    /// Smallest k with a nonzero coefficient, or -1 when all vanish.
    int leading_order() const;
    MPoly as_poly() const;
    nlohmann::json to_json() const;
};

inline constexpr int kMinContinuumTruncation = 7;

/// Substitutes w(z) = 1 - eps^2 y(t), t = eps z, into
///   w(z+1) - w(z-1) = (lambda w' + lambda nu w) / w^2
/// with lambda = 2, lambda nu = -eps^5/3, and returns LHS - RHS expanded in eps.
/// When `lambda_correction` is set, lambda = 2 + lambda_1 eps with lambda_1
/// carried as the symbol `lambda`.
/// Throws DomainError unless 7 <= truncation <= 13.
DiffPoly continuum_limit(int truncation, bool lambda_correction = false);

} // namespace ddelab
