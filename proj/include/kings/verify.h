#ifndef KINGS_VERIFY_H
#define KINGS_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace kings {

enum class Profile { kQuick, kFull };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    /// Runtime budget in seconds, 0 when the criterion has none.
    double budget_seconds = 0.0;
};

struct VerifyReport {
    Profile profile = Profile::kFull;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    bool passed() const;
};

/// Monte Carlo runs use 10^6 trials per mode, capped at 10^5 in the quick profile.
std::uint64_t monte_carlo_trials(Profile profile);

/// Runs the ten acceptance criteria in order. A criterion with a runtime
/// budget fails when it overruns.
VerifyReport run_acceptance(Profile profile, std::uint64_t seed = 20240601);

/// "PASS  [n] name: detail (t s)"
std::string format_line(const CriterionResult &r);

}  // namespace kings

#endif
