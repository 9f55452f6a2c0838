#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace npoisson {

/// Outcome of one built-in identity suite. Every suite is deterministic: the
/// random instances come from fixed seeds, so details are reproducible.
struct SuiteOutcome {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Measured values and witnesses, one fact per line.
    std::vector<std::string> details;

    bool passed() const noexcept { return checks > 0 && failures == 0; }
};

/// lemma2, pairing, power-bracket, magnetic, jacobi-div, xf-identity, casimir,
/// dirac, jacobi-manifold, volume-criteria, non-derivation
const std::vector<std::string>& suite_names();

/// Runs a suite. `n` restricts suites parameterized by the half-dimension
/// (lemma2, power-bracket, xf-identity, dirac); others reject it.
/// Throws DomainError for an unknown name or an unsupported n.
SuiteOutcome run_suite(std::string_view name, std::optional<unsigned> n = std::nullopt);

} // namespace npoisson
