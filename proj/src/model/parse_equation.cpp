#include "ddelab/model/parse_equation.hpp"

#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"

namespace ddelab {

using nlohmann::json;

RatFunc parse_coefficient(const json& value, const std::string& path) {
    if (value.is_number_integer()) return RatFunc(GaussianRational(Rational(value.dump())));
    if (!value.is_string()) throw SchemaError(path, "expected an expression string");
    try {
        return parse_ratfunc(value.get<std::string>());
    } catch (const ParseError& e) {
        throw SchemaError(path, std::string("malformed expression: ") + e.what());
    } catch (const DomainError& e) {
        throw SchemaError(path, std::string("malformed expression: ") + e.what());
    }
}

namespace {

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) throw SchemaError(path, "unknown key '" + key + "'");
}

RatFunc coefficient_or(const json& entry, const char* key, const std::string& path, long fallback) {
    if (!entry.contains(key)) return RatFunc(fallback);
    return parse_coefficient(entry.at(key), path + "." + key);
}

WPoly parse_wpoly(const json& list, const std::string& path) {
    if (!list.is_array() || list.empty()) throw SchemaError(path, "expected a nonempty coefficient list");
    std::vector<RatFunc> cs;
    for (std::size_t k = 0; k < list.size(); ++k)
        cs.push_back(parse_coefficient(list[k], path + "[" + std::to_string(k) + "]"));
    WPoly p(std::move(cs));
    if (p.is_zero()) throw SchemaError(path, "polynomial is identically zero");
    return p;
}

FactoredQ parse_q(const json& q, const std::string& path, std::vector<std::string>& notes) {
    check_keys(q, path, {"factors", "residual", "lead", "coeffs", "monic"});
    const bool monic_asserted = q.value("monic", false);
    std::optional<FactoredQ> fq;
    if (q.contains("factors")) {
        const auto& fs = q.at("factors");
        if (!fs.is_array()) throw SchemaError(path + ".factors", "expected a list");
        FactoredQ f;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const std::string p = path + ".factors[" + std::to_string(k) + "]";
            check_keys(fs[k], p, {"root", "mult"});
            if (!fs[k].contains("root")) throw SchemaError(p, "missing root");
            int mult = 1;
            if (fs[k].contains("mult")) {
                if (!fs[k].at("mult").is_number_integer() || fs[k].at("mult").get<int>() < 1)
                    throw SchemaError(p + ".mult", "multiplicity must be a positive integer");
                mult = fs[k].at("mult").get<int>();
            }
            f.factors.push_back({parse_coefficient(fs[k].at("root"), p + ".root"), mult});
        }
        if (q.contains("residual")) {
            WPoly r = parse_wpoly(q.at("residual"), path + ".residual");
            if (!r.is_monic()) throw SchemaError(path + ".residual", "residual factor must be monic");
            f.residual = r;
        }
        if (q.contains("lead")) f.lead = parse_coefficient(q.at("lead"), path + ".lead");
        if (f.lead.is_zero()) throw SchemaError(path + ".lead", "leading coefficient is zero");
        try {
            f.check_distinct_roots();
        } catch (const DomainError& e) {
            throw SchemaError(path + ".factors", e.what());
        }
        fq = f;
    }
    if (q.contains("coeffs")) {
        WPoly expanded = parse_wpoly(q.at("coeffs"), path + ".coeffs");
        if (fq) {
            if (!(fq->expand() == expanded))
                throw SchemaError(path, "supplied factorization does not reconstruct Q");
        } else {
            fq = factor_small(expanded);
            if (!fq) {
                if (expanded.degree() > 2)
                    throw SchemaError(path, "Q of degree " + std::to_string(expanded.degree()) +
                                                " requires an explicit factorization");
                throw SchemaError(path, "Q has no factorization with roots rational in z");
            }
            try {
                fq->check_distinct_roots();
            } catch (const DomainError& e) {
                throw SchemaError(path, e.what());
            }
        }
    }
    if (!fq) throw SchemaError(path, "Q needs 'factors' or 'coeffs'");
    if (!(fq->lead == RatFunc(1))) {
        if (monic_asserted) throw SchemaError(path, "Q is not monic");
        notes.push_back("P and Q divided by the leading coefficient " + fq->lead.to_string() + " of Q");
    }
    return *fq;
}

} // namespace

DelayDiffEq parse_equation(const json& entry, const std::string& path, const std::set<std::string>& extra_keys) {
    if (!entry.is_object()) throw SchemaError(path, "expected an object");
    if (!entry.contains("class") || !entry.at("class").is_string())
        throw SchemaError(path, "missing class");
    auto cls = class_from_name(entry.at("class").get<std::string>());
    if (!cls) throw SchemaError(path + ".class", "unknown class '" + entry.at("class").get<std::string>() + "'");

    std::set<std::string> allowed = extra_keys;
    allowed.insert({"id", "class", "a"});
    if (*cls == EqClass::LogDeriv) allowed.insert({"P", "Q"});
    if (*cls != EqClass::LogDeriv) allowed.insert("b");
    if (*cls == EqClass::InverseSquare) allowed.insert("c");
    check_keys(entry, path, allowed);

    std::string id;
    if (entry.contains("id")) {
        if (!entry.at("id").is_string()) throw SchemaError(path + ".id", "expected a string");
        id = entry.at("id").get<std::string>();
    }

    DelayDiffEq eq;
    switch (*cls) {
    case EqClass::LogDeriv: {
        if (!entry.contains("P")) throw SchemaError(path, "missing P");
        if (!entry.contains("Q")) throw SchemaError(path, "missing Q");
        std::vector<std::string> notes;
        RatFunc a = coefficient_or(entry, "a", path, 0);
        WPoly p = parse_wpoly(entry.at("P"), path + ".P");
        FactoredQ q = parse_q(entry.at("Q"), path + ".Q", notes);
        if (!(q.lead == RatFunc(1))) {
            p = p.scaled(RatFunc(1) / q.lead);
            q.lead = RatFunc(1);
        }
        eq = DelayDiffEq::log_deriv(a, p, q);
        eq.notes = notes;
        break;
    }
    case EqClass::PureLogDeriv:
    case EqClass::InverseSquare: {
        if (!entry.contains("a")) throw SchemaError(path, "missing a");
        RatFunc a = parse_coefficient(entry.at("a"), path + ".a");
        if (a.is_zero())
            throw SchemaError(path + ".a", "a(z) ≡ 0 violates the " + class_name(*cls) +
                                               " hypothesis a(z) ≢ 0");
        RatFunc b = coefficient_or(entry, "b", path, 0);
        eq = *cls == EqClass::PureLogDeriv ? DelayDiffEq::pure_log_deriv(a, b)
                                           : DelayDiffEq::inverse_square(a, b, coefficient_or(entry, "c", path, 0));
        break;
    }
    }
    eq.id = id;
    return eq;
}

} // namespace ddelab
