#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ddelab/cli/corpus.hpp"

namespace ddelab {

inline constexpr const char* kToolName = "ddelab";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitAnalysisFail = 1, kExitUsage = 2 };

struct RunOptions {
    /// classify, cascade, verify, nev or limit.
    std::string subcommand;
    std::optional<std::string> corpus_path;
    std::optional<std::string> out_path;
    std::uint64_t seed = 1;
    std::optional<int> truncation;
    std::string format = "json";
    std::vector<std::string> entries;
};

/// Thrown for invalid flag values and unknown entry ids (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(std::string_view data);

/// Runs one subcommand over the corpus and returns the report. Entries run in
/// parallel; the report lists them in corpus order. The report carries no
/// timing data, so equal inputs give byte-identical dumps.
nlohmann::json run_analysis(const RunOptions& opts, const Corpus& corpus);

/// True when no entry failed or errored.
bool report_passed(const nlohmann::json& report);

/// Plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ddelab
