#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ddelab/model/equation.hpp"

namespace ddelab {

/// Corpus content that is syntactically valid JSON but not a valid entry.
/// The message starts with the JSON path of the offending value.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& msg) : std::runtime_error(path + ": " + msg) {}
};

/// Parses the equation part of a corpus entry. Keys in `extra_keys` are
/// tolerated (they belong to analysis requests); any other unknown key is an
/// error. Expressions are strings in the exact grammar or JSON integers.
DelayDiffEq parse_equation(const nlohmann::json& entry, const std::string& path = "entry",
                           const std::set<std::string>& extra_keys = {});

/// Parses one expression value at the given JSON path.
RatFunc parse_coefficient(const nlohmann::json& value, const std::string& path);

} // namespace ddelab
