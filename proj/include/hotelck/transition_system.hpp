// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hotelck/model.hpp"

namespace hotelck {

// Pluggable transition system consumed by the checkers. `successors` is
// expected to already apply any step filter (NoIntervening, TypeInv) and to
// be deterministic; `encode` must be injective on states. `canonical`, when
// set, folds the visited store through a symmetry canonicalizer.
struct TransitionSystem {
    std::function<void(const std::function<void(const HotelState&)>&)> initial;
    std::function<std::vector<Step>(const HotelState&)> successors;
    std::function<std::string(const HotelState&)> encode;
    std::function<HotelState(const HotelState&)> canonical; // may be empty
};

struct HotelSystemOptions {
    bool tla_no_intervening = false; // conjoin NoIntervening into the step relation
    bool symmetry_fold = false;      // fold the visited store through canonicalize
    std::optional<HotelState> fixed_initial; // restrict Init to one state
};

TransitionSystem make_hotel_system(const HotelConfig& c, const HotelSystemOptions& opts = {});

} // namespace hotelck
