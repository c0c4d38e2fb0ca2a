#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tindep/io.hpp"

namespace tindep {

/// Trial outcomes. "invalid" means the generated instance failed its own hypotheses.
inline constexpr const char* kVerified = "verified";
inline constexpr const char* kViolated = "violated";
inline constexpr const char* kVacuous = "vacuous";
inline constexpr const char* kSkipped = "skipped";
inline constexpr const char* kInvalid = "invalid";
inline constexpr const char* kResource = "resource";

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string status;
    std::string detail;
    Json metrics = Json::object();
};

struct CampaignOptions {
    std::string name;
    int trials = 100;
    std::uint64_t seed = 1;
    int threads = 0;           // 0 = hardware concurrency
    std::string artifact_dir;  // failure artifacts are written here when set
};

struct CampaignReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<TrialResult> results;  // by trial index
    std::vector<std::string> artifacts;

    int count(const std::string& status) const;
    bool passed() const { return count(kViolated) == 0; }
    Json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& campaign_names();

/// The instance of trial `index`, fully determined by (name, index, seed).
Json make_instance(const std::string& name, int index, std::uint64_t trial_seed);
/// Runs one instance; never throws for instance content.
TrialResult run_instance(const std::string& name, const Json& instance);

/// Trials run in parallel; results are merged by trial index.
CampaignReport run_campaign(const CampaignOptions& opts);

/// Re-runs a failure artifact {"campaign", "trial", "seed", "instance"}.
TrialResult replay_artifact(const Json& artifact);

}  // namespace tindep
