#include "ddelab/cli/run.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "ddelab/analytic/continuum_limit.hpp"
#include "ddelab/analytic/verifiers.hpp"
#include "ddelab/cascade/confinement.hpp"
#include "ddelab/classify/classifier.hpp"
#include "ddelab/cli/demo_corpus.hpp"
#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"
#include "ddelab/nevanlinna/nev_table.hpp"

namespace ddelab {

namespace {

using nlohmann::json;

const std::pair<const char*, const char*> kSubcommands[] = {
    {"classify", "Necessary-condition verdicts for each equation"},
    {"cascade", "Symbolic pole cascades and confinement reports"},
    {"verify", "Numeric residual checks of explicit solutions"},
    {"nev", "Nevanlinna tables, growth estimates and ratio checks"},
    {"limit", "Continuum limit of the inverse-square normal form"},
};

struct Check {
    std::string name;
    json expected, actual;
    bool pass = false;
};

json checks_json(const std::vector<Check>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return a;
}

bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << v;
    return os.str();
}

bool exact_equal(const std::string& expected, const GaussianRational& actual) {
    const RatFunc e = parse_ratfunc(expected);
    const auto n = e.as_number();
    return n && *n == actual;
}

json entry_header(const CorpusEntry& e) {
    return {{"id", e.id}, {"class", class_name(e.eq.cls)}, {"equation", e.eq.to_string()}};
}

json error_entry(const CorpusEntry& e, const std::string& msg) {
    json j = entry_header(e);
    j["status"] = "error";
    j["error"] = msg;
    j["summary"] = "error: " + msg;
    return j;
}

// ---- classify ----

json classify_entry(const CorpusEntry& e) {
    const Verdict v = classify(e.eq);
    std::vector<Check> checks;
    if (e.expect.contains("classify")) {
        const json& x = e.expect.at("classify");
        if (x.contains("outcome"))
            checks.push_back({"outcome", x.at("outcome"), outcome_name(v.outcome), x.at("outcome") == outcome_name(v.outcome)});
        for (const char* flag : {"branch_a", "branch_b"})
            if (x.contains(flag)) {
                const bool actual = std::string(flag) == "branch_a" ? v.branch_a : v.branch_b;
                checks.push_back({flag, x.at(flag), actual, x.at(flag) == actual});
            }
        if (x.contains("params")) {
            const json& p = x.at("params");
            bool ok = v.params.has_value() && p.is_object();
            json actual = nullptr;
            if (v.params) {
                actual = {{"lambda", v.params->lambda.to_string(false)},
                          {"mu", v.params->mu.to_string(false)},
                          {"nu", v.params->nu.to_string(false)}};
                for (const char* k : {"lambda", "mu", "nu"}) {
                    if (!p.contains(k) || !p.at(k).is_string()) {
                        ok = false;
                        continue;
                    }
                    const GaussianRational& got = std::string(k) == "lambda" ? v.params->lambda
                                                  : std::string(k) == "mu"   ? v.params->mu
                                                                             : v.params->nu;
                    ok = ok && exact_equal(p.at(k).get<std::string>(), got);
                }
            }
            checks.push_back({"params", p, actual, ok});
        }
        if (x.contains("exponential_p")) {
            json actual = v.exponential_p ? json(*v.exponential_p) : json(nullptr);
            checks.push_back({"exponential_p", x.at("exponential_p"), actual, x.at("exponential_p") == actual});
        }
    }
    json j = entry_header(e);
    j["verdict"] = v.to_json();
    j["checks"] = checks_json(checks);
    j["status"] = all_pass(checks) ? "pass" : "fail";
    j["summary"] = v.summary();
    return j;
}

// ---- cascade ----

std::vector<CascadeRequest> default_cascades(const DelayDiffEq& eq) {
    CascadeRequest r;
    if (eq.cls == EqClass::InverseSquare) {
        r.steps = 4;
    } else if (eq.cls == EqClass::LogDeriv && eq.Q.degree() == 0 && eq.P.degree() >= 2) {
        r.seed = "blowup";
    }
    return {r};
}

json cascade_request_json(const CascadeRequest& r) {
    json j{{"seed", r.seed}, {"p", r.p}, {"steps", r.steps}, {"backward", r.backward}};
    if (r.b) j["b"] = r.b->to_string();
    return j;
}

std::vector<Check> cascade_checks(const json& x, const SingularityPattern& pat, const ConfinementVerdict& cv,
                                  const std::vector<int>& orders) {
    std::vector<Check> checks;
    if (x.contains("confinement")) {
        const std::string kind = confinement_kind_name(cv.kind);
        checks.push_back({"confinement", x.at("confinement"), kind, x.at("confinement") == kind});
    }
    if (x.contains("offset")) checks.push_back({"offset", x.at("offset"), cv.offset, x.at("offset") == cv.offset});
    if (x.contains("ratio")) checks.push_back({"ratio", x.at("ratio"), cv.ratio, x.at("ratio") == cv.ratio});
    if (x.contains("orders")) checks.push_back({"orders", x.at("orders"), orders, x.at("orders") == json(orders)});
    if (x.contains("witnesses")) {
        for (const auto& [name, value] : x.at("witnesses").items()) {
            const Witness* w = nullptr;
            for (const auto& c : cv.witnesses)
                if (c.name == name) w = &c;
            bool ok = false;
            json actual = nullptr;
            if (w && value.is_string()) {
                actual = w->value.to_string();
                const FieldElem expected =
                    parse_expression(value.get<std::string>(), {Var::z, Var::zhat, Var::alpha, Var::K});
                ok = frac_is_zero(expected - w->value);
            }
            checks.push_back({"witness " + name, value, actual, ok});
        }
    }
    (void)pat;
    return checks;
}

json cascade_entry(const CorpusEntry& e, const RunOptions& opts) {
    const auto requests = e.cascade.empty() ? default_cascades(e.eq) : e.cascade;
    CascadeOptions co;
    if (opts.truncation) co.truncation = *opts.truncation;
    json runs = json::array();
    std::vector<Check> checks;
    std::string summary;
    bool errored = false;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        const CascadeRequest& r = requests[i];
        json run{{"request", cascade_request_json(r)}};
        try {
            co.backward = r.backward;
            SeedSpec seed;
            seed.p = r.p;
            if (r.seed == "blowup") {
                seed.kind = SeedKind::PoleOfW;
            } else {
                seed.kind = *seed_kind_from_name(r.seed);
                if (r.b) seed.b = *r.b;
            }
            const SingularityPattern pat = run_cascade(e.eq, seed, r.steps, co);
            run["pattern"] = pat.to_json();
            run["truncation"] = pat.truncation;
            if (!pat.failure.empty()) run["failure"] = pat.failure;
            std::vector<int> orders;
            for (const auto& en : pat.entries)
                if (en.certified) orders.push_back(r.seed == "blowup" ? -en.order : en.order);
            run["orders"] = orders;
            const ConfinementVerdict cv = confinement_report(pat, e.eq);
            run["confinement"] = cv.to_json();
            if (i == 0) {
                summary = cv.summary();
                if (e.expect.contains("cascade")) checks = cascade_checks(e.expect.at("cascade"), pat, cv, orders);
            }
        } catch (const std::exception& ex) {
            run["error"] = ex.what();
            errored = true;
            if (i == 0) summary = std::string("error: ") + ex.what();
        }
        runs.push_back(run);
    }
    json j = entry_header(e);
    j["runs"] = runs;
    j["checks"] = checks_json(checks);
    j["status"] = errored ? "error" : all_pass(checks) ? "pass" : "fail";
    j["summary"] = summary;
    return j;
}

// ---- verify ----

std::optional<NormalFormParams> normal_form(const DelayDiffEq& eq) {
    if (eq.cls != EqClass::InverseSquare) return std::nullopt;
    return inverse_square_verdict(eq).params;
}

std::uint64_t entry_seed(const RunOptions& opts, const CorpusEntry& e, std::size_t index) {
    return opts.seed ^ (fnv1a(e.id) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

VerifierReport run_verifier(const VerifyRequest& r, const CorpusEntry& e, std::uint64_t seed) {
    const auto nf = normal_form(e.eq);
    if (r.check == "elliptic") {
        cplx lambda;
        if (r.lambda) {
            lambda = *r.lambda;
        } else {
            if (!nf || !nf->mu.is_zero() || !nf->nu.is_zero())
                throw DomainError("elliptic check needs an inverse-square normal form with mu = nu = 0 or an explicit lambda");
            lambda = nf->lambda.to_complex();
        }
        const auto ep = make_elliptic_params(r.g2, r.g3, r.omega, lambda, r.alpha_sign, r.flipped);
        return verify_elliptic_family(ep, r.samples, r.tol, seed);
    }
    if (r.check == "exponential") {
        if (e.eq.cls != EqClass::PureLogDeriv) throw DomainError("exponential check needs a pure-log-deriv entry");
        return verify_exponential(e.eq.a, r.p, r.C, r.samples, r.tol, seed, r.perturb);
    }
    cplx lambda, nu;
    if (r.lambda && r.nu) {
        lambda = *r.lambda;
        nu = *r.nu;
    } else {
        if (!nf || !nf->mu.is_zero()) throw DomainError("mkdv check needs an inverse-square normal form with mu = 0");
        lambda = r.lambda.value_or(nf->lambda.to_complex());
        nu = r.nu.value_or(nf->nu.to_complex());
    }
    return mkdv_identity_check(lambda, nu, r.samples, r.tol, seed, r.perturb);
}

json verify_entry(const CorpusEntry& e, const RunOptions& opts) {
    json j = entry_header(e);
    if (e.verify.empty()) {
        j["status"] = "skipped";
        j["summary"] = "no verifier requests";
        return j;
    }
    json reports = json::array();
    bool ok = true, errored = false;
    std::string summary;
    for (std::size_t i = 0; i < e.verify.size(); ++i) {
        const VerifyRequest& r = e.verify[i];
        json rj;
        try {
            const VerifierReport rep = run_verifier(r, e, entry_seed(opts, e, i));
            rj = rep.to_json();
            const bool good = rep.pass == r.expect_pass;
            rj["expect"] = r.expect_pass ? "pass" : "fail";
            rj["status"] = good ? "pass" : "fail";
            ok = ok && good;
            summary += (summary.empty() ? "" : "; ") + rep.check + (r.expect_pass ? "" : " (negative control)") +
                       " max residual " + fmt(rep.max_residual) + (good ? " ok" : " MISMATCH");
        } catch (const std::exception& ex) {
            rj = {{"check", r.check}, {"status", "error"}, {"error", ex.what()}};
            errored = true;
            summary += (summary.empty() ? "" : "; ") + r.check + " error: " + ex.what();
        }
        reports.push_back(rj);
    }
    j["reports"] = reports;
    j["status"] = errored ? "error" : ok ? "pass" : "fail";
    j["summary"] = summary;
    return j;
}

// ---- nev ----

FunctionModel build_model(const NevRequest& r, const CorpusEntry& e) {
    if (r.model == "elliptic") {
        cplx lambda;
        if (r.lambda) {
            lambda = *r.lambda;
        } else {
            const auto nf = normal_form(e.eq);
            if (!nf || !nf->mu.is_zero() || !nf->nu.is_zero())
                throw DomainError("elliptic model needs an inverse-square normal form with mu = nu = 0 or an explicit lambda");
            lambda = nf->lambda.to_complex();
        }
        return FunctionModel::elliptic(make_elliptic_params(r.g2, r.g3, r.omega, lambda));
    }
    if (r.model == "wp-power") return FunctionModel::wp_power(r.g2, r.g3, r.power);
    if (r.model == "exponential") return FunctionModel::exponential(r.C, r.rho);
    std::vector<PointMult> zeros, poles;
    for (const auto& [at, m] : r.zeros) zeros.push_back({at, m});
    for (const auto& [at, m] : r.poles) poles.push_back({at, m});
    return FunctionModel::rational(r.lead, zeros, poles);
}

void range_check(std::vector<Check>& cs, const std::string& name, const std::optional<Range>& want, double lo, double hi) {
    if (!want) return;
    cs.push_back({name, {(*want)[0], (*want)[1]}, {lo, hi}, lo >= (*want)[0] && hi <= (*want)[1]});
}

json nev_entry(const CorpusEntry& e) {
    json j = entry_header(e);
    if (e.nev.empty()) {
        j["status"] = "skipped";
        j["summary"] = "no Nevanlinna requests";
        return j;
    }
    json analyses = json::array();
    std::vector<Check> checks;
    bool errored = false;
    std::string summary;
    for (const NevRequest& r : e.nev) {
        json a;
        try {
            const FunctionModel f = build_model(r, e);
            const std::vector<double> radii = r.radii ? *r.radii : f.default_radii();
            const NevTable table = characteristic_table(f, radii, r.target);
            const GrowthEstimate g = growth_estimates(table);
            a["table"] = table.to_json();
            a["growth"] = g.to_json();
            range_check(checks, r.model + " order", r.expect_order, g.rho.value, g.rho.value);
            range_check(checks, r.model + " hyper-order", r.expect_hyper_order, g.rho2.value, g.rho2.value);
            std::string line = f.description() + ": order " + fmt(g.rho.value) + " +- " + fmt(g.rho.width);
            if (r.target == cplx(0)) {
                std::optional<int> deg_r;
                if (e.eq.cls == EqClass::LogDeriv) deg_r = mohonko_degree(e.eq).deg_r;
                std::optional<NevTable> comp;
                if (r.composed_power)
                    comp = characteristic_table(FunctionModel::wp_power(r.g2, r.g3, r.power * *r.composed_power), radii);
                const RatioReport rr = ratio_checks(table, deg_r, comp ? &*comp : nullptr, r.composed_power.value_or(0));
                a["ratios"] = rr.to_json();
                if (!rr.rows.empty()) {
                    const auto [lo, hi] = rr.top_half_zero_ratio();
                    range_check(checks, r.model + " zero ratio (top half)", r.expect_zero_ratio, lo, hi);
                    line += ", zero ratio " + fmt(lo) + ".." + fmt(hi);
                }
                if (auto c = rr.top_half_composed_ratio()) {
                    range_check(checks, r.model + " composed ratio (top half)", r.expect_composed_ratio, c->first, c->second);
                    line += ", T(f^" + std::to_string(*r.composed_power) + ")/T(f) " + fmt(c->first) + ".." + fmt(c->second);
                }
            }
            summary += (summary.empty() ? "" : "; ") + line;
        } catch (const std::exception& ex) {
            a = {{"model", r.model}, {"error", ex.what()}};
            errored = true;
            summary += (summary.empty() ? "" : "; ") + r.model + " error: " + ex.what();
        }
        analyses.push_back(a);
    }
    j["analyses"] = analyses;
    j["checks"] = checks_json(checks);
    j["status"] = errored ? "error" : all_pass(checks) ? "pass" : "fail";
    j["summary"] = summary;
    return j;
}

// ---- limit ----

json limit_result(const RunOptions& opts) {
    const int T = opts.truncation.value_or(kMinContinuumTruncation);
    const DiffPoly d = continuum_limit(T);
    const MPoly y0 = MPoly::var(Var::y0), y1 = MPoly::var(y_var(1)), y3 = MPoly::var(y_var(3));
    const MPoly expected5 = (y3 - y0 * y1 * GaussianRational(12) - MPoly(1)) * GaussianRational(Rational(-1, 3));
    std::vector<Check> checks;
    bool low_zero = true;
    for (int k = 0; k < 5; ++k) low_zero = low_zero && d.coefficient(k).is_zero();
    checks.push_back({"eps^0..eps^4 coefficients vanish", true, low_zero, low_zero});
    checks.push_back({"eps^5 coefficient", expected5.to_string(), d.coefficient(5).to_string(), d.coefficient(5) == expected5});
    json j{{"id", "continuum-limit"},
           {"substitution", "w(z) = 1 - eps^2 y(t), t = eps z, lambda = 2, lambda nu = -eps^5/3"},
           {"expansion", d.to_json()},
           {"eps3", d.coefficient(3).to_string()},
           {"eps5", d.coefficient(5).to_string()},
           {"statement", "the eps^5 coefficient vanishes exactly when y''' = 12 y y' + 1"},
           {"checks", checks_json(checks)}};
    j["status"] = all_pass(checks) ? "pass" : "fail";
    j["summary"] = "eps^5: " + d.coefficient(5).to_string() + " = 0  <=>  y''' = 12 y y' + 1";
    return j;
}

json analyse_entry(const CorpusEntry& e, const RunOptions& opts) {
    try {
        if (opts.subcommand == "classify") return classify_entry(e);
        if (opts.subcommand == "cascade") return cascade_entry(e, opts);
        if (opts.subcommand == "verify") return verify_entry(e, opts);
        return nev_entry(e);
    } catch (const std::exception& ex) {
        return error_entry(e, ex.what());
    }
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot write output file '" + path + "': " + ec.message());
    }
}

} // namespace

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

nlohmann::json run_analysis(const RunOptions& opts, const Corpus& corpus) {
    if (opts.truncation && (*opts.truncation < 2 || *opts.truncation > kMaxTruncation))
        throw UsageError("--truncation must lie in [2, " + std::to_string(kMaxTruncation) + "]");
    if (opts.subcommand == "limit" && opts.truncation &&
        (*opts.truncation < kMinContinuumTruncation || *opts.truncation - 3 > kMaxYIndex))
        throw UsageError("limit needs --truncation in [" + std::to_string(kMinContinuumTruncation) + ", " +
                         std::to_string(kMaxYIndex + 3) + "]");
    for (const auto& id : opts.entries) {
        bool found = false;
        for (const auto& e : corpus.entries) found = found || e.id == id;
        if (!found) throw UsageError("unknown entry id '" + id + "'");
    }

    std::ostringstream cfg;
    cfg << opts.subcommand << '\n' << opts.seed << '\n' << (opts.truncation ? std::to_string(*opts.truncation) : "-") << '\n';
    for (const auto& id : opts.entries) cfg << id << ',';
    cfg << '\n' << corpus.canonical;

    json report{{"tool", kToolName},
                {"version", kToolVersion},
                {"subcommand", opts.subcommand},
                {"seed", opts.seed},
                {"truncation", opts.truncation ? json(*opts.truncation) : json(nullptr)},
                {"corpus", opts.corpus_path ? *opts.corpus_path : "builtin-demo"},
                {"config_hash", hex64(fnv1a(cfg.str()))}};

    json entries = json::array();
    if (opts.subcommand == "limit") {
        entries.push_back(limit_result(opts));
    } else {
        std::vector<const CorpusEntry*> selected;
        for (const auto& e : corpus.entries)
            if (opts.entries.empty() || std::find(opts.entries.begin(), opts.entries.end(), e.id) != opts.entries.end())
                selected.push_back(&e);
        std::vector<std::future<json>> jobs;
        for (const CorpusEntry* e : selected)
            jobs.push_back(std::async(std::launch::async, [e, &opts] { return analyse_entry(*e, opts); }));
        for (auto& j : jobs) entries.push_back(j.get());
    }
    int pass = 0, fail = 0, error = 0, skipped = 0;
    for (const auto& e : entries) {
        const std::string s = e.at("status");
        if (s == "pass") ++pass;
        else if (s == "fail") ++fail;
        else if (s == "error") ++error;
        else ++skipped;
    }
    report["entries"] = entries;
    report["summary"] = {{"pass", pass}, {"fail", fail}, {"error", error}, {"skipped", skipped}};
    return report;
}

bool report_passed(const nlohmann::json& report) {
    const json& s = report.at("summary");
    return s.at("fail") == 0 && s.at("error") == 0;
}

std::string render_text(const nlohmann::json& report) {
    std::ostringstream os;
    os << report.at("tool").get<std::string>() << ' ' << report.at("version").get<std::string>() << "  "
       << report.at("subcommand").get<std::string>() << "  corpus " << report.at("corpus").get<std::string>()
       << "  seed " << report.at("seed").get<std::uint64_t>() << "  config " << report.at("config_hash").get<std::string>()
       << '\n';
    for (const auto& e : report.at("entries")) {
        std::string status = e.at("status");
        for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << '[' << status << "] " << e.at("id").get<std::string>() << ": " << e.at("summary").get<std::string>();
        if (e.contains("wall_time_s")) os << "  (" << fmt(e.at("wall_time_s").get<double>()) << " s)";
        os << '\n';
        if (e.contains("checks"))
            for (const auto& c : e.at("checks"))
                if (!c.at("pass").get<bool>())
                    os << "    check " << c.at("name").get<std::string>() << ": expected " << c.at("expected").dump()
                       << ", got " << c.at("actual").dump() << '\n';
    }
    const json& s = report.at("summary");
    os << "pass " << s.at("pass") << ", fail " << s.at("fail") << ", error " << s.at("error") << ", skipped "
       << s.at("skipped") << '\n';
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Singularity and growth analysis of delay differential equations", kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(0, 1);
    RunOptions opts;
    std::string corpus_path, out_path, demo_out;
    std::vector<std::string> entries;
    int truncation = 0;
    app.add_option("--emit-demo-corpus", demo_out, "Write the built-in demo corpus to FILE and exit")->type_name("FILE");

    for (const auto& [name, help] : kSubcommands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (std::string(name) != "limit") {
            sub->add_option("--corpus", corpus_path, "Corpus JSON file (default: built-in demo corpus)");
            sub->add_option("--entry", entries, "Restrict to these entry ids");
        }
        sub->add_option("--out", out_path, "Write the report to FILE instead of stdout");
        sub->add_option("--seed", opts.seed, "Seed for randomized checks");
        sub->add_option("--truncation", truncation, "Cascade start truncation / continuum-limit order");
        sub->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        if (!demo_out.empty()) {
            write_atomically(demo_out, demo_corpus().dump(2) + "\n");
            return kExitOk;
        }
        if (app.get_subcommands().empty()) {
            err << "usage error: a subcommand is required (classify, cascade, verify, nev, limit)\n";
            return kExitUsage;
        }
        const CLI::App* sub = app.get_subcommands().front();
        opts.subcommand = sub->get_name();
        if (sub->get_option_no_throw("--corpus") && sub->count("--corpus")) opts.corpus_path = corpus_path;
        if (sub->count("--out")) opts.out_path = out_path;
        if (sub->count("--truncation")) opts.truncation = truncation;
        opts.entries = entries;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Corpus corpus;
    try {
        corpus = opts.corpus_path ? load_corpus_file(*opts.corpus_path) : parse_corpus(demo_corpus());
    } catch (const json::parse_error& e) {
        err << "corpus error: not valid JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "expression error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    json report;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        report = run_analysis(opts, corpus);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (opts.format == "json") {
        text = report.dump(2) + "\n";
    } else {
        text = render_text(report) + "wall time " + fmt(elapsed) + " s\n";
    }
    if (opts.out_path) {
        try {
            write_atomically(*opts.out_path, text);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    } else {
        out << text;
    }
    return report_passed(report) ? kExitOk : kExitAnalysisFail;
}

} // namespace ddelab
