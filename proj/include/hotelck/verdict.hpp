// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hotelck/model.hpp"

namespace hotelck {

// Alternating states and labels; |labels| = |states| - 1.
struct Trace {
    std::vector<HotelState> states;
    std::vector<ActionLabel> labels;

    std::size_t length() const { return states.size(); }
};

// Replays the trace: state 0 satisfies Init and each (state[i], label[i])
// pair is an enabled step producing state[i+1].
bool validate_trace(const Trace& trace, const HotelConfig& c, bool check_init = true);

enum class VerdictKind { Verified, CounterExample, DepthExhausted, Deadlock };

std::string verdict_kind_name(VerdictKind kind);

struct CheckStats {
    std::uint64_t states_explored = 0;
    std::uint32_t diameter = 0;      // maximum depth reached
    std::uint64_t deadlocks = 0;     // deadlocked states seen (informational)
};

struct Verdict {
    VerdictKind kind = VerdictKind::Verified;
    CheckStats stats;
    std::optional<Trace> trace;      // CounterExample / Deadlock
    std::string violated_property;   // CounterExample
    std::uint32_t max_depth = 0;     // DepthExhausted

    static Verdict verified(CheckStats stats);
    static Verdict counter_example(Trace trace, std::string property, CheckStats stats);
    static Verdict depth_exhausted(std::uint32_t max_depth, CheckStats stats);
    static Verdict deadlock(Trace trace, CheckStats stats);
};

} // namespace hotelck
