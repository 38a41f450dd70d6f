#pragma once

// Registry of checkable claims. Each claim computes one fact, compares it with
// the expected value and yields a ClaimReport; run_all executes the whole set.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace isogate {

inline constexpr std::string_view kReportSchema = "isogate-report/1";

enum class ClaimStatus { pass, fail, inconclusive };

std::string_view to_string(ClaimStatus s);

struct ClaimReport {
    std::string claim_id;
    nlohmann::json params = nlohmann::json::object();
    ClaimStatus status = ClaimStatus::fail;
    nlohmann::json expected;
    nlohmann::json computed;
    std::int64_t elapsed_ms = 0;

    nlohmann::json to_json() const;
};

/// Tunables a config file may override.
struct ClaimConfig {
    std::uint32_t sample_bound = 10'000;
    std::int64_t height_bound = 1000;
    /// Per-curve prime lists for the torsion claims, keyed by label ("X0(14)").
    std::map<std::string, std::vector<std::uint32_t>> torsion_primes;
    /// Replaces the default r list of claims that iterate over r.
    std::optional<std::vector<int>> r_list;

    /// Keys: sample_bound, height_bound, torsion_primes, r_list. Unknown keys are rejected.
    static ClaimConfig from_json(const nlohmann::json& j);
    static ClaimConfig load(const std::string& path);
};

struct ClaimInfo {
    std::string id;
    std::string description;
    std::vector<int> default_r;  // empty when the claim does not iterate over r
};

/// Registered claims, sorted by id.
const std::vector<ClaimInfo>& claim_registry();

/// Throws UnknownClaim for an unregistered id; parameter errors propagate.
ClaimReport run_claim(std::string_view id, const ClaimConfig& config = {});

/// Every registered claim, ordered by id.
std::vector<ClaimReport> run_all(const ClaimConfig& config = {});

/// JSON array of reports; pretty-printed with a trailing newline.
std::string reports_to_json(const std::vector<ClaimReport>& reports);

/// Acceptance criterion number (1..14) -> claim ids backing it.
const std::map<int, std::vector<std::string>>& criterion_claims();

}  // namespace isogate
