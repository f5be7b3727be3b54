#pragma once

#include <string>
#include <vector>

#include "qdf/claims.hpp"

namespace qdf {

enum class Status { Pass, Fail, Limited };

struct ClaimResult {
    std::string id;
    std::string paper_location;
    std::string description;
    Status status = Status::Limited;
    std::string witness;
    std::string field_used;
    long ms = 0;
};

struct Report {
    std::string field;  // configuration snapshot
    std::string order;
    std::size_t budget_pairs = 0;
    std::uint64_t seed = 0;
    std::vector<ClaimResult> results;  // sorted by claim id

    int passed = 0, failed = 0, limited = 0;
};

// Runs every registry claim matching one of the patterns (all claims when
// patterns is empty) on a bounded worker pool; results are aggregated in
// claim-id order. Throws Error when no claim matches.
Report run_claims(const std::vector<std::string>& patterns, const RunConfig& cfg);

std::string emit_text(const Report& r);
// Stable-schema structured output; wall times are zeroed unless
// real_timings is set, so identical configurations yield identical bytes.
std::string emit_structured(const Report& r, bool real_timings = false);

// 0 all pass, 1 any fail, 2 any resource-limited without fails.
int report_exit_code(const Report& r);

}  // namespace qdf
