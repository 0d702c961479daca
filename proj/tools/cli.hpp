#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgr/report.hpp"

namespace qgr::cli {

enum class Output { text, json };

struct CliConfig {
    int k = 0;
    int n = 0;
    double tol = 1e-8;
    std::uint64_t seed = kDefaultSeed;
    std::filesystem::path cache_dir = ".qgr-cache";
    Output output = Output::text;
};

/// Exit codes returned by run().
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadInput = 2,
    kDegenerateSpectrum = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// File used by --cache for G(k, n).
std::filesystem::path cache_file(const std::filesystem::path& dir, int k, int n);

}  // namespace qgr::cli
