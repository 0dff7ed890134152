// SPDX-License-Identifier: Apache-2.0
//
// Explicit-state checker: BFS and depth-bounded DFS over a TransitionSystem,
// with configurable stuttering semantics, deadlock policy and trace
// reconstruction from per-state predecessor records.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "hotelck/transition_system.hpp"
#include "hotelck/verdict.hpp"

namespace hotelck {

// In Delta mode a step whose successor equals the source is a stuttering
// step: transition properties are not evaluated on it. In LabelAware mode
// every produced step is evaluated.
enum class StutterMode { LabelAware, Delta };

enum class DeadlockPolicy { Ignore, Flag };

enum class SearchOrder { Bfs, Dfs };

struct CheckSemantics {
    StutterMode stutter = StutterMode::LabelAware;
    DeadlockPolicy deadlock = DeadlockPolicy::Ignore;
    // In Delta mode, also count states whose only successors are self-loops
    // as deadlocked.
    bool strict_delta_deadlock = false;
    SearchOrder search = SearchOrder::Bfs;
    std::uint32_t max_depth = 100;   // DFS only
    std::uint64_t max_states = 0;    // 0 = unlimited
    // Key the visited store by 64-bit fingerprints instead of full
    // encodings. Unsound under collision; for memory experiments only.
    bool fingerprint_store = false;
};

class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::uint64_t explored, std::uint64_t limit);
    std::uint64_t states_explored;
    std::uint64_t limit;
};

// True when the step satisfies the property.
using StepProperty = std::function<bool(const HotelState&, const ActionLabel&, const HotelState&)>;

// Breadth-first check; a returned counter-example has the minimum number of
// states among all counter-examples under the given semantics.
Verdict bfs_check(const TransitionSystem& ts, const StepProperty& property,
                  const std::string& property_name, const CheckSemantics& sem);

// Depth-first check cut at sem.max_depth steps; counter-examples need not be
// minimal. Verified only when exploration completed without cutting.
Verdict dfs_check(const TransitionSystem& ts, const StepProperty& property,
                  const std::string& property_name, const CheckSemantics& sem);

struct ReachStats {
    std::uint64_t state_count = 0;
    std::uint32_t diameter = 0;
    std::uint64_t deadlock_count = 0;
};

// Full exploration without a property; exact counts, search-order
// independent. Deadlock definition follows sem (strict_delta_deadlock).
ReachStats reachable_stats(const TransitionSystem& ts, const CheckSemantics& sem);

} // namespace hotelck
