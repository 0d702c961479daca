#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgr {

/// One counterexample: where it occurred and both sides of the identity.
struct Failure {
    std::string where;
    std::string lhs;
    std::string rhs;
};

/// Outcome of a verification suite.  Failures are data, never exceptions.
struct Report {
    std::string suite;
    int k = 0;
    int n = 0;
    std::size_t checked = 0;
    std::vector<Failure> failures;
    /// Numeric suites record the largest deviation seen and the seed used.
    std::optional<double> max_deviation;
    std::optional<std::uint64_t> seed;

    bool ok() const { return failures.empty(); }
    void fail(std::string where, std::string lhs, std::string rhs) {
        failures.push_back({std::move(where), std::move(lhs), std::move(rhs)});
    }
};

/// {"suite":..., "ctx":{"k":..,"n":..}, "checked":.., "failures":[...]}
/// plus "max_deviation" and "seed" when present.
std::string report_to_json(const Report& report);

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace qgr
