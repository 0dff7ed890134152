// SPDX-License-Identifier: Apache-2.0
//
// Two-phase checking: enumerate (optionally canonical) initial states first,
// then run an independent explicit-state check per fixed initial state on a
// worker pool. Aggregation is deterministic regardless of worker count.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hotelck/checker.hpp"
#include "hotelck/verdict.hpp"

namespace hotelck {

// The initial-state generator derived from the dynamic model: the Init
// enumeration, piped through canonical deduplication when symmetry is on.
// Output is sorted by encoding.
std::vector<HotelState> derive_initial_generator(const HotelConfig& c, bool symmetry);

struct TaskReport {
    std::string initial_encoding;
    VerdictKind kind = VerdictKind::Verified;
    std::uint64_t states_explored = 0;
    bool resource_error = false;
    bool skipped = false; // task not run (short_circuit stop)
};

struct HybridReport {
    std::vector<TaskReport> tasks;     // in ascending initial-encoding order
    std::uint64_t violating_tasks = 0;
    std::uint64_t resource_errors = 0;
};

struct HybridOptions {
    bool symmetry = false;
    unsigned workers = 1;
    bool tla_no_intervening = false;
    // Stop scheduling tasks after the first violation. Faster, but the
    // reported counter-example is no longer deterministic; off by default.
    bool short_circuit = false;
};

// Verified iff all tasks are Verified; otherwise the counter-example from
// the task with the smallest initial-state encoding. Per-task resource
// errors are isolated: the run continues and the aggregate degrades to
// DepthExhausted if no violation was found elsewhere.
std::pair<Verdict, HybridReport> hybrid_check(const HotelConfig& c,
                                              const StepProperty& property,
                                              const std::string& property_name,
                                              const CheckSemantics& sem,
                                              const HybridOptions& opts);

} // namespace hotelck
