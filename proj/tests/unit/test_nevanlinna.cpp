#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddelab/exact/errors.hpp"
#include "ddelab/nevanlinna/nev_table.hpp"

using namespace ddelab;

namespace {

const cplx kI(0.0, 1.0);

FunctionModel elliptic_model() { return FunctionModel::elliptic(make_elliptic_params(2.0, 1.0, cplx(0.3, 0.2), 2.0)); }

std::vector<double> small_grid(const FunctionModel& f, int count, double hi_cells) {
    const auto [b1, b2] = f.lattice_basis();
    const double diam = std::max(std::abs(b1 + b2), std::abs(b1 - b2));
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(2.0137 * diam * std::pow(hi_cells * 1.0071 / 2.0137, static_cast<double>(i) / (count - 1)));
    return out;
}

// Lattice points with |p| <= r by a plain double loop over a generous index box.
long brute_count(cplx b1, cplx b2, double r) {
    const double h = std::abs((std::conj(b1) * b2).imag()) / std::max(std::abs(b1), std::abs(b2));
    const long box = static_cast<long>(r / h) + 3;
    long c = 0;
    for (long m = -box; m <= box; ++m)
        for (long n = -box; n <= box; ++n)
            if (std::abs(static_cast<double>(m) * b1 + static_cast<double>(n) * b2) <= r) ++c;
    return c;
}

} // namespace

TEST_CASE("lattice enumeration matches brute force") {
    const auto f = elliptic_model();
    const auto [b1, b2] = f.lattice_basis();
    for (double r : {5.0, 17.3, 40.0, 93.1}) {
        CHECK(static_cast<long>(lattice_points(b1, b2, r).size()) == brute_count(b1, b2, r));
        long n = 0;
        for (const auto& p : f.poles(r)) n += p.mult;
        CHECK(n == 2 * brute_count(b1, b2, r));
    }
}

TEST_CASE("elliptic inventories") {
    const auto f = elliptic_model();
    const auto [b1, b2] = f.lattice_basis();
    const double area = std::abs((std::conj(b1) * b2).imag());
    const double r = 150.0;
    long n = 0;
    for (const auto& p : f.poles(r)) n += p.mult;
    // one double pole per cell
    CHECK(static_cast<double>(n) / (2.0 * std::numbers::pi * r * r / area) == doctest::Approx(1.0).epsilon(0.02));
    // zeros: simple, at z = +-1 modulo the lattice
    const auto zeros = f.a_points(0.0, 30.0);
    REQUIRE(!zeros.empty());
    for (const auto& z : zeros) {
        CHECK(z.mult == 1);
        const double d1 = std::min(std::abs(z.location - 1.0), std::abs(z.location + 1.0));
        bool on_lattice = false;
        for (const cplx& l : lattice_points(b1, b2, 40.0))
            if (std::abs(z.location - 1.0 - l) < 1e-8 || std::abs(z.location + 1.0 - l) < 1e-8) on_lattice = true;
        CHECK((on_lattice || d1 < 1e-8));
        CHECK(std::abs(f.value(z.location)) < 1e-7);
    }
    // a-points of a generic value really are a-points
    for (const auto& p : f.a_points(cplx(1.0, 0.5), 20.0))
        CHECK(std::abs(f.value(p.location) - cplx(1.0, 0.5)) < 1e-7);
}

TEST_CASE("wp-power inventories") {
    const auto p2 = FunctionModel::wp_power(2.0, 1.0, 2);
    for (const auto& p : p2.poles(10.0)) CHECK(p.mult == 4);
    for (const auto& z : p2.a_points(0.0, 10.0)) {
        CHECK(z.mult == 2);
        CHECK(std::abs(p2.value(z.location)) < 1e-12);
    }
}

TEST_CASE("integrated counting equals the piecewise integral of n(t)/t") {
    const auto f = elliptic_model();
    const double r = 80.0;
    auto pts = f.poles(r);
    pts.push_back({0.0, 2});  // an origin term must contribute n(0) log r
    std::vector<std::pair<double, int>> mods;
    for (const auto& p : pts) mods.push_back({std::abs(p.location), p.mult});
    std::sort(mods.begin(), mods.end());
    long n0 = 0;
    for (const auto& [m, k] : mods)
        if (m <= 1e-12) n0 += k;
    double integral = 0.0;
    long n = n0;
    std::size_t i = 0;
    while (i < mods.size() && mods[i].first <= 1e-12) ++i;
    double t = i < mods.size() ? mods[i].first : r;
    for (; i < mods.size(); ++i) {
        integral += static_cast<double>(n - n0) * std::log(mods[i].first / t);
        t = mods[i].first;
        n += mods[i].second;
    }
    integral += static_cast<double>(n - n0) * std::log(r / t);
    const double expect = static_cast<double>(n0) * std::log(r) + integral;
    CHECK(integrated_counting(pts, r, false) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("rational model: T grows like d log r") {
    const auto f = FunctionModel::rational(2.0, {{1.0, 1}, {-2.0, 2}}, {{3.0 * kI, 1}});
    const auto radii = f.default_radii();
    const auto t = characteristic_table(f, radii);
    const double d = 3.0;
    double lo = 1e300, hi = -1e300;
    for (const auto& row : t.rows) {
        lo = std::min(lo, row.T - d * std::log(row.r));
        hi = std::max(hi, row.T - d * std::log(row.r));
    }
    CHECK(hi - lo < 0.1);
    // two-radius oracle from direct evaluation: log|f| at large r is d log r + log|lead| up to O(1/r)
    const double r1 = radii.front(), r2 = radii.back();
    CHECK((t.rows.back().T - t.rows.front().T) == doctest::Approx(d * std::log(r2 / r1)).epsilon(1e-3));
    const auto g = growth_estimates(t);
    CHECK(std::abs(g.rho.value) <= 0.1);
    CHECK_THROWS_AS(f.a_points(1.0, 10.0), DomainError);
}

TEST_CASE("exponential model") {
    const auto f = FunctionModel::exponential(1.0, cplx(0.0, std::numbers::pi));
    const auto t = characteristic_table(f, f.default_radii());
    for (const auto& row : t.rows) {
        CHECK(row.n == 0);
        CHECK(row.N == 0.0);
        CHECK(row.N_bar_a == 0.0);
        // m(r, exp(a z)) = |a| r / pi
        CHECK(row.m == doctest::Approx(row.r).epsilon(1e-8));
    }
    const auto g = growth_estimates(t);
    CHECK(g.rho.value >= 0.9);
    CHECK(g.rho.value <= 1.1);
    CHECK(std::abs(g.rho2.value) <= 0.15);
    const auto rep = ratio_checks(t);
    CHECK(rep.top_half_zero_ratio().second == 0.0);

    const auto shifted = characteristic_table(f, {9.0, 20.0}, 1.0);
    CHECK(shifted.rows[0].n_a == 9);  // exp(pi i z) = 1 at even integers
}

TEST_CASE("elliptic model growth and ratios") {
    const auto f = elliptic_model();
    const auto radii = small_grid(f, 12, 8.0);
    const auto t = characteristic_table(f, radii);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].T >= t.rows[i - 1].T);
        CHECK(t.rows[i].N >= t.rows[i - 1].N);
    }
    for (const auto& row : t.rows) CHECK(row.m >= 0.0);
    const auto g = growth_estimates(t);
    CHECK(g.rho.value >= 1.85);
    CHECK(g.rho.value <= 2.15);
    const auto rep = ratio_checks(t, 4);
    const auto [lo, hi] = rep.top_half_zero_ratio();
    CHECK(lo >= 0.8);
    CHECK(hi <= 1.1);
    CHECK(*rep.rows.back().degree_lhs == doctest::Approx(rep.rows.back().T));
}

TEST_CASE("T(r, 1/(f - a)) stays close to T(r, f)") {
    const auto f = elliptic_model();
    const auto radii = small_grid(f, 8, 6.0);
    for (cplx a : {cplx(0.0), cplx(1.0)}) {
        const auto t = characteristic_table(f, radii, a);
        for (std::size_t i = t.rows.size() / 2; i < t.rows.size(); ++i) {
            const auto& row = t.rows[i];
            CHECK(std::abs(row.T_a - row.T) <= 10.0 + 0.05 * row.T);
        }
    }
}

TEST_CASE("Valiron-Mohon'ko spot check for p^2") {
    const auto p1 = FunctionModel::wp_power(2.0, 1.0, 1), p2 = FunctionModel::wp_power(2.0, 1.0, 2);
    const auto radii = small_grid(p1, 10, 8.0);
    const auto rep = ratio_checks(p1, radii, {}, &p2, 2);
    const auto c = *rep.top_half_composed_ratio();
    CHECK(c.first >= 1.8);
    CHECK(c.second <= 2.2);
}

TEST_CASE("quadrature converges under node doubling") {
    const auto f = elliptic_model();
    for (double r : small_grid(f, 4, 6.0)) {
        QuadratureOptions q;
        q.initial_arcs = 256;
        const double m1 = proximity([&](cplx z) { return f.log_abs(z); }, r, q);
        q.initial_arcs = 512;
        const double m2 = proximity([&](cplx z) { return f.log_abs(z); }, r, q);
        CHECK(std::abs(m1 - m2) <= 1e-8 * std::max(1.0, std::abs(m1)));
    }
}

TEST_CASE("radius on a pole is jittered") {
    const auto f = elliptic_model();
    const auto [b1, b2] = f.lattice_basis();
    const double r = std::abs(b1);
    const auto t = characteristic_table(f, {r});
    CHECK(t.rows[0].jittered);
    CHECK(std::abs(t.rows[0].r_used - r) <= 1.0001e-6 * r);
}

TEST_CASE("grid validation and exports") {
    const auto f = FunctionModel::rational(1.0, {{1.0, 1}}, {});
    CHECK_THROWS_AS(characteristic_table(f, {}), DomainError);
    CHECK_THROWS_AS(characteristic_table(f, {2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(characteristic_table(f, {0.0, 1.0}), DomainError);
    const auto t = characteristic_table(f, {2.0, 4.0});
    const std::string csv = t.to_csv();
    CHECK(csv.rfind("r,n,n_bar,N,N_bar,m,T\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(t.to_json().dump() == characteristic_table(f, {2.0, 4.0}).to_json().dump());
    const auto g = growth_estimates(t);
    CHECK(g.low_confidence);
}
