#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddelab/analytic/weierstrass.hpp"
#include "ddelab/model/equation.hpp"
#include "ddelab/model/parse_equation.hpp"

namespace ddelab {

inline constexpr int kCorpusSchemaVersion = 1;

struct CascadeRequest {
    /// zero_of_w, zero_of_w_minus_b, pole_of_w or blowup.
    std::string seed = "zero_of_w";
    int p = 1;
    int steps = 3;
    std::optional<RatFunc> b;
    bool backward = false;
};

struct VerifyRequest {
    /// elliptic, exponential or mkdv.
    std::string check;
    cplx g2{}, g3{}, omega{};
    /// Taken from the entry's normal form when absent.
    std::optional<cplx> lambda, nu;
    int p = 0;
    cplx C{1.0};
    int samples = 100;
    double tol = 0.0;
    int alpha_sign = 1;
    bool flipped = false;
    cplx perturb{};
    /// The check is a negative control when false.
    bool expect_pass = true;
};

using Range = std::array<double, 2>;

struct NevRequest {
    /// elliptic, exponential, rational or wp-power.
    std::string model;
    cplx g2{}, g3{}, omega{};
    std::optional<cplx> lambda;
    cplx C{1.0}, rho{};
    cplx lead{1.0};
    std::vector<std::pair<cplx, int>> zeros, poles;
    int power = 1;
    std::optional<std::vector<double>> radii;
    cplx target{};
    /// Also tabulate f^composed_power (wp-power models only).
    std::optional<int> composed_power;
    std::optional<Range> expect_order, expect_hyper_order, expect_zero_ratio, expect_composed_ratio;
};

struct CorpusEntry {
    std::string id;
    std::string description;
    DelayDiffEq eq;
    std::vector<CascadeRequest> cascade;
    std::vector<VerifyRequest> verify;
    std::vector<NevRequest> nev;
    /// Expected results keyed by subcommand ("classify", "cascade").
    nlohmann::json expect = nlohmann::json::object();
};

struct Corpus {
    int schema_version = kCorpusSchemaVersion;
    std::vector<CorpusEntry> entries;
    /// Canonical dump of the source document, hashed into the report.
    std::string canonical;
};

/// Validates the whole document before anything runs; throws SchemaError.
Corpus parse_corpus(const nlohmann::json& doc);

/// Reads and parses a corpus file. Throws std::runtime_error when the file
/// cannot be read, nlohmann::json::parse_error on malformed JSON and
/// SchemaError on schema violations.
Corpus load_corpus_file(const std::string& path);

/// Complex number given as a JSON number or a [re, im] pair.
cplx parse_complex(const nlohmann::json& v, const std::string& path);

} // namespace ddelab
