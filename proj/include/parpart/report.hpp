// report.hpp - run reports emitted next to every construction artifact
#pragma once

#include "types.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace parpart {

// Per-activation bookkeeping for the incremental E3 phase. `rejected` counts
// candidates (or centers) discarded as bad before one was accepted; in audit
// mode `bad_total` additionally counts the bad ones among all candidates.
struct ActivationRecord {
    Edge edge;
    Vertex swapped_endpoint = -1;
    int rejected = 0;
    int bad_total = -1; // -1 when audit mode was off
};

struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::string> warnings;

    // repair phase
    long long defects_processed = 0;
    long long repair_swaps = 0;
    long long rearrangements = 0;

    // incremental E3 phase
    long long activations = 0;
    long long conflicted_activations = 0;
    long long activation_swaps = 0;
    std::vector<ActivationRecord> activation_records;

    std::vector<ConditionReport> conditions;
    std::vector<std::string> verification; // names of checks that passed

    nlohmann::json to_json() const;
};

nlohmann::json condition_to_json(const ConditionReport& r);

} // namespace parpart
