#pragma once

#include <json.hpp>

namespace ddelab {

/// The built-in demonstration corpus, used when no corpus file is given.
const nlohmann::json& demo_corpus();

} // namespace ddelab
