#ifndef BESSELQUAD_IDENTITY_SUITE_HPP
#define BESSELQUAD_IDENTITY_SUITE_HPP

#include "besselquad/oracles.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace besselquad {

/// One registered identity. `run` draws its random samples (if any) from the
/// generator it is handed and reports the worst error against its own
/// tolerance.
struct Identity {
    std::string id;
    std::string description;
    std::function<IdentityReport(std::mt19937_64&)> run;
};

using IdentityRegistry = std::vector<Identity>;

struct SuiteConfig {
    std::uint64_t seed = 20240611;
    /// Identity ids to run; empty means all of them.
    std::vector<std::string> only;
};

/// Every identity the library knows: oracle self-consistency first, then
/// the integral representations against the oracles.
const IdentityRegistry& default_registry();

/// Runs the selected identities in registry order. Each identity gets its
/// own generator seeded from (config.seed, id), so a filtered run draws the
/// same samples as the full one. An identity that throws is reported as a
/// failure with the exception text in `detail`; the suite never aborts.
std::vector<IdentityReport> run_identity_suite(const IdentityRegistry& registry, const SuiteConfig& config = {});

/// Convenience overload on the default registry.
std::vector<IdentityReport> run_identity_suite(const SuiteConfig& config = {});

} // namespace besselquad

#endif // BESSELQUAD_IDENTITY_SUITE_HPP
