#include "ddelab/nevanlinna/nev_table.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

constexpr double kOriginTol = 1e-12;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

nlohmann::json row_json(const NevRow& r) {
    return {{"r", r.r},     {"r_used", r.r_used}, {"n", r.n},         {"n_bar", r.n_bar},     {"N", r.N},
            {"N_bar", r.N_bar}, {"m", r.m},       {"T", r.T},         {"n_a", r.n_a},         {"n_bar_a", r.n_bar_a},
            {"N_a", r.N_a}, {"N_bar_a", r.N_bar_a}, {"m_a", r.m_a},   {"T_a", r.T_a},         {"jittered", r.jittered}};
}

void count(const std::vector<PointMult>& pts, double r, long& n, long& n_bar) {
    n = n_bar = 0;
    for (const auto& p : pts)
        if (std::abs(p.location) <= r) {
            n += p.mult;
            ++n_bar;
        }
}

// Picks a radius within 1e-6 r of r that stays as far as possible from the
// moduli of the given singular points, when one lies within 1e-3 r.
double jitter_radius(double r, const std::vector<double>& moduli, bool& jittered) {
    jittered = false;
    auto clearance = [&](double rr) {
        double d = std::numeric_limits<double>::infinity();
        for (double m : moduli) d = std::min(d, std::abs(m - rr));
        return d;
    };
    if (clearance(r) > 1e-3 * r) return r;
    double best = r, best_d = clearance(r);
    for (int i = -20; i <= 20; ++i) {
        const double rr = r * (1.0 + 1e-6 * i / 20.0);
        const double d = clearance(rr);
        if (d > best_d) {
            best = rr;
            best_d = d;
        }
    }
    jittered = best != r;
    return best;
}

int arcs_for(const std::vector<double>& moduli, double r, const QuadratureOptions& quad) {
    long near = 0;
    for (double m : moduli)
        if (m >= 0.5 * r && m <= 2.0 * r) ++near;
    const long arcs = std::clamp<long>(8 * near, quad.initial_arcs, 1 << 16);
    return static_cast<int>(std::max<long>(arcs, quad.initial_arcs));
}

double log_abs_minus(const FunctionModel& f, cplx a, cplx z) {
    const double la = f.log_abs(z);
    if (a == cplx(0)) return la;
    if (std::isinf(la)) return la > 0 ? la : std::log(std::abs(a));
    if (la > 40.0 + std::log1p(std::abs(a))) return la;
    return std::log(std::abs(f.value(z) - a));
}

} // namespace

double integrated_counting(const std::vector<PointMult>& points, double r, bool distinct) {
    double acc = 0.0;
    for (const auto& p : points) {
        const double mod = std::abs(p.location);
        if (mod > r) continue;
        const double w = distinct ? 1.0 : p.mult;
        acc += mod <= kOriginTol ? w * std::log(r) : w * std::log(r / mod);
    }
    return acc;
}

std::string NevTable::to_csv() const {
    std::ostringstream os;
    os << "r,n,n_bar,N,N_bar,m,T\n";
    for (const auto& r : rows)
        os << fmt(r.r) << ',' << r.n << ',' << r.n_bar << ',' << fmt(r.N) << ',' << fmt(r.N_bar) << ',' << fmt(r.m)
           << ',' << fmt(r.T) << '\n';
    return os.str();
}

nlohmann::json NevTable::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows) rs.push_back(row_json(r));
    return {{"model", model}, {"params", model_params}, {"target", {target.real(), target.imag()}}, {"rows", rs}};
}

NevTable characteristic_table(const FunctionModel& f, const std::vector<double>& radii, cplx target,
                              const QuadratureOptions& quad) {
    if (radii.empty()) throw DomainError("empty radius grid");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("radius grid must be increasing");
    }
    const double rmax = radii.back() * (1.0 + 1e-5);
    const std::vector<PointMult> poles = f.poles(rmax);
    const std::vector<PointMult> apts = f.a_points(target, rmax);
    std::vector<double> moduli;
    for (const auto* list : {&poles, &apts})
        for (const auto& p : *list) moduli.push_back(std::abs(p.location));
    std::sort(moduli.begin(), moduli.end());

    auto make_row = [&](double r) {
        NevRow row;
        row.r = r;
        row.r_used = jitter_radius(r, moduli, row.jittered);
        const double ru = row.r_used;
        count(poles, ru, row.n, row.n_bar);
        count(apts, ru, row.n_a, row.n_bar_a);
        row.N = integrated_counting(poles, ru, false);
        row.N_bar = integrated_counting(poles, ru, true);
        row.N_a = integrated_counting(apts, ru, false);
        row.N_bar_a = integrated_counting(apts, ru, true);
        QuadratureOptions q = quad;
        q.initial_arcs = arcs_for(moduli, ru, quad);
        bool ok1 = true, ok2 = true;
        row.m = proximity([&](cplx z) { return f.log_abs(z); }, ru, q, &ok1);
        row.m_a = proximity([&](cplx z) { return -log_abs_minus(f, target, z); }, ru, q, &ok2);
        if (!ok1 || !ok2) throw DomainError("quadrature did not converge at r = " + fmt(r));
        row.T = row.m + row.N;
        row.T_a = row.m_a + row.N_a;
        return row;
    };

    std::vector<std::future<NevRow>> jobs;
    jobs.reserve(radii.size());
    for (double r : radii) jobs.push_back(std::async(std::launch::async, make_row, r));
    NevTable t;
    t.model = f.description();
    t.model_params = f.params_json();
    t.target = target;
    for (auto& j : jobs) t.rows.push_back(j.get());
    return t;
}

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    SlopeFit s;
    const std::size_t n = x.size();
    s.rows = static_cast<int>(n);
    if (n < 2) return s;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return s;
    s.value = sxy / sxx;
    if (n > 2) {
        double ss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = y[i] - my - s.value * (x[i] - mx);
            ss += e * e;
        }
        s.width = 2.0 * std::sqrt(ss / static_cast<double>(n - 2) / sxx);
    }
    return s;
}

nlohmann::json GrowthEstimate::to_json() const {
    auto fit = [](const SlopeFit& f) { return nlohmann::json{{"value", f.value}, {"width", f.width}, {"rows", f.rows}}; };
    return {{"order", fit(rho)},
            {"hyper_order", fit(rho2)},
            {"pole_hyper_exponent", fit(lambda2)},
            {"low_confidence", low_confidence},
            {"notes", notes}};
}

GrowthEstimate growth_estimates(const NevTable& table) {
    GrowthEstimate g;
    std::vector<double> x, yT, yTT, xn, yn;
    for (const auto& r : table.rows) {
        if (r.T > std::exp(1.0)) {
            x.push_back(std::log(r.r));
            yT.push_back(std::log(r.T));
            yTT.push_back(std::log(std::log(r.T)));
        }
        if (static_cast<double>(r.n) > std::exp(1.0)) {
            xn.push_back(std::log(r.r));
            yn.push_back(std::log(std::log(static_cast<double>(r.n))));
        }
    }
    g.rho = fit_slope(x, yT);
    g.rho2 = fit_slope(x, yTT);
    g.lambda2 = fit_slope(xn, yn);
    if (x.size() < 8) {
        g.low_confidence = true;
        g.notes.push_back("fewer than 8 rows with T > e");
    }
    if (!x.empty() && x.back() - x.front() < std::log(4.0)) {
        g.low_confidence = true;
        g.notes.push_back("radius range spans less than a factor of 4");
    }
    if (xn.size() < 2) g.notes.push_back("pole counts too small for a hyper-exponent fit");
    return g;
}

std::pair<double, double> RatioReport::top_half_zero_ratio() const {
    if (rows.empty()) throw DomainError("no usable rows");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = rows.size() / 2; i < rows.size(); ++i) {
        lo = std::min(lo, rows[i].zero_ratio);
        hi = std::max(hi, rows[i].zero_ratio);
    }
    return {lo, hi};
}

std::optional<std::pair<double, double>> RatioReport::top_half_composed_ratio() const {
    if (rows.empty() || !rows.front().composed_ratio) return std::nullopt;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = rows.size() / 2; i < rows.size(); ++i) {
        lo = std::min(lo, *rows[i].composed_ratio);
        hi = std::max(hi, *rows[i].composed_ratio);
    }
    return std::make_pair(lo, hi);
}

nlohmann::json RatioReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"r", r.r}, {"T", r.T}, {"N_bar_zeros", r.N_bar_zeros}, {"zero_ratio", r.zero_ratio}};
        if (r.degree_lhs) {
            j["degree_lhs"] = *r.degree_lhs;
            j["degree_rhs"] = *r.degree_rhs;
        }
        if (r.composed_ratio) j["composed_ratio"] = *r.composed_ratio;
        rs.push_back(j);
    }
    nlohmann::json j{{"rows", rs}, {"notes", notes}};
    if (!rows.empty()) {
        const auto [lo, hi] = top_half_zero_ratio();
        j["top_half_zero_ratio"] = {lo, hi};
    }
    if (auto c = top_half_composed_ratio()) j["top_half_composed_ratio"] = {c->first, c->second};
    if (deg_r) j["deg_r"] = *deg_r;
    if (composed_degree) j["composed_degree"] = *composed_degree;
    return j;
}

RatioReport ratio_checks(const FunctionModel& f, const std::vector<double>& radii, std::optional<int> deg_r,
                         const FunctionModel* composed, int composed_degree) {
    const NevTable base = characteristic_table(f, radii, 0.0);
    if (!composed) return ratio_checks(base, deg_r);
    const NevTable comp = characteristic_table(*composed, radii, 0.0);
    return ratio_checks(base, deg_r, &comp, composed_degree);
}

RatioReport ratio_checks(const NevTable& base, std::optional<int> deg_r, const NevTable* composed,
                         int composed_degree) {
    if (base.target != cplx(0)) throw DomainError("ratio checks need a table with target value 0");
    if (composed && composed->rows.size() != base.rows.size())
        throw DomainError("composed table has a different radius grid");
    RatioReport rep;
    rep.deg_r = deg_r;
    if (composed) rep.composed_degree = composed_degree;
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        const NevRow& b = base.rows[i];
        if (composed && composed->rows[i].r != b.r) throw DomainError("composed table has a different radius grid");
        if (b.T < 1e-8) {
            rep.notes.push_back("skipped r = " + fmt(b.r) + ": T below 1e-8");
            continue;
        }
        RatioRow row;
        row.r = b.r;
        row.T = b.T;
        row.N_bar_zeros = b.N_bar_a;
        row.zero_ratio = b.N_bar_a / b.T;
        if (deg_r) {
            row.degree_lhs = (*deg_r - 3) * b.T;
            row.degree_rhs = b.N_bar_a;
        }
        if (composed) row.composed_ratio = composed->rows[i].T / b.T;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace ddelab
