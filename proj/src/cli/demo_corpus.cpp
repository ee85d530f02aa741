#include "ddelab/cli/demo_corpus.hpp"

namespace ddelab {

namespace {

constexpr const char* kDemo = R"j({
  "schema_version": 1,
  "entries": [
    {
      "id": "kvm-reduction",
      "description": "w(w(z+1) - w(z-1)) + w' = 2w with constant coefficients",
      "class": "pure-log-deriv", "a": "1", "b": "2",
      "cascade": {"seed": "zero_of_w", "p": 1, "steps": 3},
      "expect": {
        "classify": {"outcome": "ConsistentBranchA"},
        "cascade": {"orders": [-1, -1, 1]}
      }
    },
    {
      "id": "normal-form-1-0-0",
      "description": "inverse-square normal form with (lambda, mu, nu) = (1, 0, 0); elliptic solutions",
      "class": "inverse-square", "a": "1", "b": "0", "c": "0",
      "cascade": {"seed": "zero_of_w", "p": 1, "steps": 4},
      "verify": [
        {"check": "elliptic", "g2": 2, "g3": 1, "Omega": [0.3, 0.2], "samples": 100, "tol": 1e-8},
        {"check": "elliptic", "g2": 2, "g3": 1, "Omega": [0.3, 0.2], "samples": 100, "tol": 1e-3,
         "flipped": true, "expect": "fail"}
      ],
      "nev": [
        {"model": "elliptic", "g2": 2, "g3": 1, "Omega": [0.3, 0.2],
         "radii": {"from": 30, "to": 170, "count": 12},
         "expect": {"order": [1.85, 2.15], "zero_ratio": [0.8, 1.1]}},
        {"model": "wp-power", "g2": 2, "g3": 1, "power": 1, "composed_power": 2,
         "radii": {"from": 6, "to": 30, "count": 10},
         "expect": {"composed_ratio": [1.8, 2.2]}}
      ],
      "expect": {
        "classify": {"outcome": "ConsistentBranchA", "params": {"lambda": "1", "mu": "0", "nu": "0"}},
        "cascade": {"confinement": "ConfinedAt", "offset": 3, "orders": [-2, 1, 0, 1]}
      }
    },
    {
      "id": "normal-form-1-2-3",
      "description": "inverse-square normal form with (lambda, mu, nu) = (1, 2, 3)",
      "class": "inverse-square", "a": "1+2*z", "b": "1+6*z", "c": "0",
      "cascade": {"seed": "zero_of_w", "p": 1, "steps": 4},
      "expect": {
        "classify": {"outcome": "ConsistentBranchA", "params": {"lambda": "1", "mu": "2", "nu": "3"}},
        "cascade": {"confinement": "ConfinedAt", "offset": 3}
      }
    },
    {
      "id": "perturbed-constant-a",
      "description": "a = 1, b = z: not of normal form; the simple pole at offset 3 is not cancelled",
      "class": "inverse-square", "a": "1", "b": "z", "c": "0",
      "cascade": {"seed": "zero_of_w", "p": 1, "steps": 4},
      "expect": {
        "classify": {"outcome": "ViolatesNecessaryCondition"},
        "cascade": {"confinement": "SimplePoleTail", "orders": [-2, 1, -1, 0],
                    "witnesses": {"gamma(zhat)": "-2"}}
      }
    },
    {
      "id": "mkdv-reduction",
      "description": "normal form with (lambda, mu, nu) = (2, 0, -1/6), a similarity reduction of mKdV",
      "class": "inverse-square", "a": "2", "b": "-1/3", "c": "0",
      "verify": [
        {"check": "mkdv", "samples": 100, "tol": 1e-12},
        {"check": "mkdv", "samples": 100, "tol": 1e-3, "perturb": 1, "expect": "fail"}
      ],
      "expect": {
        "classify": {"outcome": "ConsistentBranchA", "params": {"lambda": "2", "mu": "0", "nu": "-1/6"}}
      }
    },
    {
      "id": "blowup-w4",
      "description": "w(z+1) - w(z-1) + w'/w = w^4: pole orders grow geometrically",
      "class": "log-deriv", "P": ["0", "0", "0", "0", "1"], "Q": {"factors": []},
      "cascade": {"seed": "blowup", "p": 1, "steps": 3},
      "expect": {
        "classify": {"outcome": "ViolatesNecessaryCondition"},
        "cascade": {"confinement": "ExponentialOrderGrowth", "ratio": 4, "orders": [4, 16, 64]}
      }
    },
    {
      "id": "branch-a",
      "description": "deg P = deg Q + 1 = 3",
      "class": "log-deriv", "a": "1", "P": ["1", "0", "0", "1"],
      "Q": {"factors": [{"root": "z", "mult": 1}, {"root": "2*z", "mult": 1}]},
      "expect": {"classify": {"outcome": "ConsistentBranchA", "branch_a": true, "branch_b": false}}
    },
    {
      "id": "branch-violates",
      "description": "deg_w R = 4",
      "class": "log-deriv", "a": "1", "P": ["0", "0", "0", "0", "1"],
      "Q": {"factors": [{"root": "z", "mult": 1}, {"root": "2*z", "mult": 1}]},
      "expect": {"classify": {"outcome": "ViolatesNecessaryCondition", "branch_a": false, "branch_b": false}}
    },
    {
      "id": "branch-b",
      "description": "right-hand side free of w",
      "class": "log-deriv", "a": "1", "P": ["z"], "Q": {"factors": []},
      "expect": {"classify": {"outcome": "ConsistentBranchB", "branch_a": false, "branch_b": true}}
    },
    {
      "id": "exponential-family",
      "description": "a = z^2 with b = 2*pi*i*a, supplied numerically by the verifier; the exact b field is left 0",
      "class": "pure-log-deriv", "a": "z^2",
      "verify": [
        {"check": "exponential", "p": 2, "C": 1, "samples": 50},
        {"check": "exponential", "p": 2, "C": 1, "samples": 50, "perturb": 1, "expect": "fail"}
      ],
      "nev": {"model": "exponential", "C": 1, "rho": [0, 3.141592653589793],
              "expect": {"order": [0.9, 1.1], "hyper_order": [-0.15, 0.15], "zero_ratio": [0, 0]}}
    },
    {
      "id": "exponential-unit",
      "description": "a = 1, p = 1, C = 3 - 2i",
      "class": "pure-log-deriv", "a": "1",
      "verify": {"check": "exponential", "p": 1, "C": [3, -2], "samples": 50}
    }
  ]
})j";

} // namespace

const nlohmann::json& demo_corpus() {
    static const nlohmann::json doc = nlohmann::json::parse(kDemo);
    return doc;
}

} // namespace ddelab
