#include "ddelab/cli/corpus.hpp"

#include <cmath>

#include <fstream>
#include <set>
#include <sstream>

#include "ddelab/cascade/cascade.hpp"

namespace ddelab {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) throw SchemaError(path, "unknown key '" + k + "'");
}

int get_int(const json& obj, const std::string& key, const std::string& path, int fallback, int lo, int hi) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi)
        throw SchemaError(path + "." + key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(x);
}

double get_double(const json& obj, const std::string& key, const std::string& path, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
    return v.get<double>();
}

bool get_bool(const json& obj, const std::string& key, const std::string& path, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) throw SchemaError(path + "." + key, "expected true or false");
    return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw SchemaError(path, "missing " + key);
    if (!obj.at(key).is_string()) throw SchemaError(path + "." + key, "expected a string");
    return obj.at(key).get<std::string>();
}

cplx required_complex(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw SchemaError(path, "missing " + key);
    return parse_complex(obj.at(key), path + "." + key);
}

std::optional<cplx> optional_complex(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    return parse_complex(obj.at(key), path + "." + key);
}

std::optional<Range> get_range(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number() || v[0].get<double>() > v[1].get<double>())
        throw SchemaError(path + "." + key, "expected [lo, hi] with lo <= hi");
    return Range{v[0].get<double>(), v[1].get<double>()};
}

// One request or a list of them.
std::vector<std::pair<const json*, std::string>> request_list(const json& v, const std::string& path) {
    std::vector<std::pair<const json*, std::string>> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(&v[i], path + "[" + std::to_string(i) + "]");
    } else {
        out.emplace_back(&v, path);
    }
    return out;
}

CascadeRequest parse_cascade_request(const json& v, const std::string& path) {
    check_keys(v, path, {"seed", "p", "steps", "b", "backward"});
    CascadeRequest r;
    if (v.contains("seed")) {
        r.seed = get_string(v, "seed", path);
        if (r.seed != "blowup" && !seed_kind_from_name(r.seed))
            throw SchemaError(path + ".seed", "unknown seed '" + r.seed + "'");
    }
    r.p = get_int(v, "p", path, 1, 1, 8);
    r.steps = get_int(v, "steps", path, 3, 1, 8);
    if (v.contains("b")) r.b = parse_coefficient(v.at("b"), path + ".b");
    if (r.seed == "zero_of_w_minus_b" && !r.b) throw SchemaError(path, "seed zero_of_w_minus_b needs b");
    r.backward = get_bool(v, "backward", path, false);
    return r;
}

VerifyRequest parse_verify_request(const json& v, const std::string& path) {
    VerifyRequest r;
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    r.check = get_string(v, "check", path);
    std::string expect = "pass";
    if (v.contains("expect")) {
        expect = get_string(v, "expect", path);
        if (expect != "pass" && expect != "fail") throw SchemaError(path + ".expect", "expected \"pass\" or \"fail\"");
    }
    r.expect_pass = expect == "pass";
    if (r.check == "elliptic") {
        check_keys(v, path, {"check", "expect", "g2", "g3", "Omega", "lambda", "samples", "tol", "alpha_sign", "flipped"});
        r.g2 = required_complex(v, "g2", path);
        r.g3 = required_complex(v, "g3", path);
        r.omega = required_complex(v, "Omega", path);
        r.lambda = optional_complex(v, "lambda", path);
        r.samples = get_int(v, "samples", path, 100, 1, 100000);
        r.tol = get_double(v, "tol", path, 1e-8);
        r.alpha_sign = get_int(v, "alpha_sign", path, 1, -1, 1);
        if (r.alpha_sign == 0) throw SchemaError(path + ".alpha_sign", "must be 1 or -1");
        r.flipped = get_bool(v, "flipped", path, false);
    } else if (r.check == "exponential") {
        check_keys(v, path, {"check", "expect", "p", "C", "samples", "tol", "perturb"});
        r.p = get_int(v, "p", path, 0, -64, 64);
        if (!v.contains("p")) throw SchemaError(path, "missing p");
        if (v.contains("C")) r.C = parse_complex(v.at("C"), path + ".C");
        r.samples = get_int(v, "samples", path, 50, 1, 100000);
        r.tol = get_double(v, "tol", path, 1e-10);
        if (v.contains("perturb")) r.perturb = parse_complex(v.at("perturb"), path + ".perturb");
    } else if (r.check == "mkdv") {
        check_keys(v, path, {"check", "expect", "lambda", "nu", "samples", "tol", "perturb"});
        r.lambda = optional_complex(v, "lambda", path);
        r.nu = optional_complex(v, "nu", path);
        r.samples = get_int(v, "samples", path, 100, 1, 100000);
        r.tol = get_double(v, "tol", path, 1e-12);
        if (v.contains("perturb")) r.perturb = parse_complex(v.at("perturb"), path + ".perturb");
    } else {
        throw SchemaError(path + ".check", "unknown check '" + r.check + "'");
    }
    return r;
}

std::vector<std::pair<cplx, int>> parse_points(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected a list of {at, mult}");
    std::vector<std::pair<cplx, int>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        check_keys(v[i], p, {"at", "mult"});
        out.emplace_back(required_complex(v[i], "at", p), get_int(v[i], "mult", p, 1, 1, 1000));
    }
    return out;
}

NevRequest parse_nev_request(const json& v, const std::string& path) {
    NevRequest r;
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    r.model = get_string(v, "model", path);
    std::set<std::string> keys{"model", "radii", "target", "composed_power", "expect"};
    if (r.model == "elliptic") {
        keys.insert({"g2", "g3", "Omega", "lambda"});
        check_keys(v, path, keys);
        r.g2 = required_complex(v, "g2", path);
        r.g3 = required_complex(v, "g3", path);
        r.omega = required_complex(v, "Omega", path);
        r.lambda = optional_complex(v, "lambda", path);
    } else if (r.model == "wp-power") {
        keys.insert({"g2", "g3", "power"});
        check_keys(v, path, keys);
        r.g2 = required_complex(v, "g2", path);
        r.g3 = required_complex(v, "g3", path);
        r.power = get_int(v, "power", path, 1, 1, 16);
    } else if (r.model == "exponential") {
        keys.insert({"C", "rho"});
        check_keys(v, path, keys);
        if (v.contains("C")) r.C = parse_complex(v.at("C"), path + ".C");
        r.rho = required_complex(v, "rho", path);
    } else if (r.model == "rational") {
        keys.insert({"lead", "zeros", "poles"});
        check_keys(v, path, keys);
        if (v.contains("lead")) r.lead = parse_complex(v.at("lead"), path + ".lead");
        if (v.contains("zeros")) r.zeros = parse_points(v.at("zeros"), path + ".zeros");
        if (v.contains("poles")) r.poles = parse_points(v.at("poles"), path + ".poles");
    } else {
        throw SchemaError(path + ".model", "unknown model '" + r.model + "'");
    }
    if (v.contains("radii")) {
        const json& g = v.at("radii");
        const std::string gp = path + ".radii";
        std::vector<double> radii;
        if (g.is_array()) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (!g[i].is_number()) throw SchemaError(gp + "[" + std::to_string(i) + "]", "expected a number");
                radii.push_back(g[i].get<double>());
            }
        } else {
            check_keys(g, gp, {"from", "to", "count"});
            const double lo = get_double(g, "from", gp, 0.0), hi = get_double(g, "to", gp, 0.0);
            const int count = get_int(g, "count", gp, 24, 2, 1000);
            if (!(lo > 0.0) || !(hi > lo)) throw SchemaError(gp, "need 0 < from < to");
            for (int i = 0; i < count; ++i)
                radii.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
        }
        if (radii.empty()) throw SchemaError(gp, "empty radius grid");
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1])))
                throw SchemaError(gp, "radii must be positive and increasing");
        r.radii = radii;
    }
    if (v.contains("target")) r.target = parse_complex(v.at("target"), path + ".target");
    if (v.contains("composed_power")) {
        if (r.model != "wp-power") throw SchemaError(path + ".composed_power", "only supported for wp-power models");
        r.composed_power = get_int(v, "composed_power", path, 2, 2, 16);
    }
    if (v.contains("expect")) {
        const json& e = v.at("expect");
        const std::string ep = path + ".expect";
        check_keys(e, ep, {"order", "hyper_order", "zero_ratio", "composed_ratio"});
        r.expect_order = get_range(e, "order", ep);
        r.expect_hyper_order = get_range(e, "hyper_order", ep);
        r.expect_zero_ratio = get_range(e, "zero_ratio", ep);
        r.expect_composed_ratio = get_range(e, "composed_ratio", ep);
        if (r.expect_composed_ratio && !r.composed_power)
            throw SchemaError(ep + ".composed_ratio", "needs composed_power");
        if (r.expect_zero_ratio && r.target != cplx(0))
            throw SchemaError(ep + ".zero_ratio", "needs target 0");
    }
    return r;
}

void check_expect(const json& e, const std::string& path) {
    check_keys(e, path, {"classify", "cascade"});
    if (e.contains("classify"))
        check_keys(e.at("classify"), path + ".classify", {"outcome", "branch_a", "branch_b", "params", "exponential_p"});
    if (e.contains("cascade"))
        check_keys(e.at("cascade"), path + ".cascade", {"confinement", "offset", "ratio", "orders", "witnesses"});
}

} // namespace

cplx parse_complex(const json& v, const std::string& path) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw SchemaError(path, "expected a number or [re, im]");
}

Corpus parse_corpus(const json& doc) {
    check_keys(doc, "corpus", {"schema_version", "entries"});
    if (!doc.contains("schema_version")) throw SchemaError("corpus", "missing schema_version");
    if (!doc.at("schema_version").is_number_integer()) throw SchemaError("corpus.schema_version", "expected an integer");
    Corpus c;
    c.schema_version = doc.at("schema_version").get<int>();
    if (c.schema_version != kCorpusSchemaVersion)
        throw SchemaError("corpus.schema_version", "unsupported version " + std::to_string(c.schema_version) +
                                                       " (expected " + std::to_string(kCorpusSchemaVersion) + ")");
    if (!doc.contains("entries") || !doc.at("entries").is_array())
        throw SchemaError("corpus", "missing entries list");
    std::set<std::string> seen;
    const json& entries = doc.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        if (!e.is_object()) throw SchemaError(path, "expected an object");
        if (!e.contains("id")) throw SchemaError(path, "missing id");
        CorpusEntry ce;
        ce.eq = parse_equation(e, path, {"description", "cascade", "verify", "nev", "expect"});
        ce.id = ce.eq.id;
        if (ce.id.empty()) throw SchemaError(path + ".id", "must be non-empty");
        if (!seen.insert(ce.id).second) throw SchemaError(path + ".id", "duplicate id '" + ce.id + "'");
        if (e.contains("description")) ce.description = get_string(e, "description", path);
        if (e.contains("cascade"))
            for (const auto& [v, p] : request_list(e.at("cascade"), path + ".cascade"))
                ce.cascade.push_back(parse_cascade_request(*v, p));
        if (e.contains("verify"))
            for (const auto& [v, p] : request_list(e.at("verify"), path + ".verify"))
                ce.verify.push_back(parse_verify_request(*v, p));
        if (e.contains("nev"))
            for (const auto& [v, p] : request_list(e.at("nev"), path + ".nev"))
                ce.nev.push_back(parse_nev_request(*v, p));
        if (e.contains("expect")) {
            check_expect(e.at("expect"), path + ".expect");
            ce.expect = e.at("expect");
        }
        c.entries.push_back(std::move(ce));
    }
    c.canonical = doc.dump();
    return c;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(json::parse(ss.str()));
}

} // namespace ddelab
