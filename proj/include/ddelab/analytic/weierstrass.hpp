#pragma once

#include <array>
#include <complex>
#include <vector>

namespace ddelab {

using cplx = std::complex<double>;

struct WpValue {
    cplx p;
    cplx dp;
    /// z is (numerically) a lattice point; p and dp are not meaningful.
    bool pole = false;
};

/// Weierstrass elliptic function for invariants (g2, g3).
///
/// Values come from the Laurent series at the origin (20 terms) after the
/// argument is reduced modulo the period lattice and halved until it is small,
/// followed by the duplication formulas. Periods are obtained from the roots
/// of 4x^3 - g2 x - g3 with the arithmetic-geometric mean and then checked
/// numerically.
class Weierstrass {
public:
    static constexpr int kLaurentTerms = 20;

    /// Throws DomainError when g2^3 - 27 g3^2 vanishes.
    Weierstrass(cplx g2, cplx g3);

    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }

    WpValue eval(cplx z) const;
    /// Evaluation without lattice reduction (halving and duplication only).
    WpValue eval_unreduced(cplx z) const;

    /// Reduced lattice basis (full periods 2*omega), shortest first.
    cplx period1() const { return p1_; }
    cplx period2() const { return p2_; }
    const std::array<cplx, 3>& roots() const { return roots_; }
    /// Coefficients c_k of p(z) = z^-2 + sum_{k>=2} c_k z^(2k-2), indexed by k.
    const std::vector<cplx>& laurent() const { return c_; }

    /// z minus the nearest lattice point.
    cplx reduce(cplx z) const;
    /// Integer coordinates (m, n) of the lattice point m*period1 + n*period2 nearest to z.
    std::pair<long, long> nearest_lattice(cplx z) const;

    /// Solves p(z) = value near `guess` by Newton iteration; returns the reduced root.
    cplx solve(cplx value, cplx guess) const;

private:
    WpValue series(cplx z) const;
    WpValue halve_and_double(cplx z) const;
    void compute_periods();

    cplx g2_, g3_;
    std::vector<cplx> c_;
    double series_radius_ = 0.0;
    std::array<cplx, 3> roots_{};
    cplx p1_, p2_;
};

/// One-shot evaluation of p and p' at z.
WpValue wp_eval(cplx z, cplx g2, cplx g3);

/// Roots of a cubic a3 x^3 + a2 x^2 + a1 x + a0 by Durand-Kerner with Newton polish.
std::array<cplx, 3> cubic_roots(cplx a3, cplx a2, cplx a1, cplx a0);

/// Arithmetic-geometric mean with the "right" choice of square root at each step.
cplx agm(cplx a, cplx b);

} // namespace ddelab
