// SPDX-License-Identifier: Apache-2.0
//
// Exact-length trace checking: exhaustive search over traces with exactly t
// states (every step a produced action step, no implicit stuttering), with
// the optional three-instant NoIntervening look-ahead whose obligation is
// waived when the Checkin is the final step.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hotelck/checker.hpp"
#include "hotelck/transition_system.hpp"
#include "hotelck/verdict.hpp"

namespace hotelck {

// Decides whether any trace with exactly t states violates the property.
// Returns the lexicographically-first counter-example, ordering traces by
// (initial-state encoding, label sequence). Throws std::invalid_argument for
// t = 0. states_explored counts memoized (state, obligation, remaining)
// search nodes.
Verdict bounded_check(const TransitionSystem& ts, const StepProperty& property,
                      const std::string& property_name, std::uint32_t t,
                      bool alloy_no_intervening);

struct SweepEntry {
    std::uint32_t t = 0;
    VerdictKind kind = VerdictKind::Verified;
    std::uint32_t ce_states = 0; // counter-example length, when found
};

struct SweepReport {
    std::vector<SweepEntry> per_t;
};

// Runs bounded_check for t = 1..t_max, stopping at the first
// counter-example; reports the per-t outcome.
std::pair<Verdict, SweepReport> bounded_sweep(const TransitionSystem& ts,
                                              const StepProperty& property,
                                              const std::string& property_name,
                                              std::uint32_t t_max,
                                              bool alloy_no_intervening);

} // namespace hotelck
