// SPDX-License-Identifier: Apache-2.0
//
// Hotel room locking protocol as an explicit finite transition system:
// states, the initial-state predicate, the Entry/Checkin/Checkout actions
// and the safety predicates checked over them.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hotelck {

// Identifier universes are 0..size-1; masks fit in 16 bits.
inline constexpr int kMaxUniverse = 16;

struct HotelConfig {
    int key_count = 0;      // keys are 0..key_count-1, totally ordered
    int room_universe = 0;  // room ids 0..room_universe-1
    int guest_universe = 0; // guest ids 0..guest_universe-1
    // When true every initial state uses the full room and guest universes;
    // when false they range over all subsets.
    bool exact_scope = false;

    std::uint16_t key_mask() const { return static_cast<std::uint16_t>((1u << key_count) - 1u); }

    // Throws std::invalid_argument on out-of-range sizes.
    void validate() const;
};

enum class ActionKind : std::uint8_t { Entry = 0, Checkin = 1, Checkout = 2 };

struct ActionLabel {
    ActionKind kind = ActionKind::Entry;
    std::int8_t guest = -1;
    std::int8_t room = -1; // -1 for Checkout
    std::int8_t key = -1;  // -1 for Checkout

    static ActionLabel entry(int g, int r, int k);
    static ActionLabel checkin(int g, int r, int k);
    static ActionLabel checkout(int g);

    friend auto operator<=>(const ActionLabel&, const ActionLabel&) = default;
};

std::string to_string(const ActionLabel& label);

// One valuation of all variable parameters. Slots for rooms/guests outside
// the `rooms`/`guests` masks are kept zeroed so that structural equality and
// the byte encoding are injective on the represented valuation.
struct HotelState {
    std::uint32_t rooms = 0;  // subset of the room universe
    std::uint32_t guests = 0; // subset of the guest universe
    std::vector<std::uint16_t> keys;     // per room: pool of keys (mask)
    std::vector<std::uint8_t> current;   // per room: key the lock recognizes
    std::vector<std::uint8_t> last;      // per room: last key the desk issued
    std::vector<std::uint16_t> occupant; // per room: set of guests (mask)
    std::vector<std::uint16_t> gkeys;    // per guest: keys held (mask)

    friend bool operator==(const HotelState&, const HotelState&) = default;

    bool has_room(int r) const { return (rooms >> r) & 1u; }
    bool has_guest(int g) const { return (guests >> g) & 1u; }
    int room_universe() const { return static_cast<int>(keys.size()); }
    int guest_universe() const { return static_cast<int>(gkeys.size()); }
};

// Injective byte encoding; lexicographic order on encodings is the canonical
// state order used everywhere (enumeration, visited stores, tie-breaks).
std::string encode_state(const HotelState& s);
HotelState decode_state(std::string_view bytes, const HotelConfig& c);

// Returns a state with all-empty universes sized for c.
HotelState empty_state(const HotelConfig& c);

// Smallest key in `pool` strictly greater than k, if any.
std::optional<int> next_key(int k, std::uint16_t pool);

// Type invariant: well-sized maps, keys in range, current drawn from the
// room's pool, pairwise-disjoint pools, occupants drawn from present guests,
// zeroed slots outside the room/guest subsets.
bool type_inv(const HotelState& s, const HotelConfig& c);

// True iff s satisfies the initial-state predicate under c: scope respected,
// pools disjoint and nonempty with current in pool, last = current, no
// occupants, no keys held.
bool is_initial_state(const HotelState& s, const HotelConfig& c);

// Yields every initial state exactly once, in ascending encode_state order.
void enumerate_initial_states(const HotelConfig& c,
                              const std::function<void(const HotelState&)>& sink);
std::vector<HotelState> initial_states(const HotelConfig& c);

struct Step {
    ActionLabel label;
    HotelState target;
};

// All enabled (label, successor) pairs from s, sorted by label
// (Entry < Checkin < Checkout, then guest/room/key). Self-loop Entry steps
// (k = current[r]) are produced; their treatment is a checker concern.
std::vector<Step> enabled_steps(const HotelState& s, const HotelConfig& c);

// Post-condition of Checkin: g is the sole occupant of r holding key k that
// the desk registered last but the lock has not yet seen.
bool post_pred(const HotelState& s, int g, int r, int k);

// Safety predicate over a step: an Entry into an occupied room must be by an
// occupant. True for every non-Entry step.
bool no_bad_entry_step(const HotelState& s, const ActionLabel& label, const HotelState& target);

// TLA-style NoIntervening as a step filter: whenever some (g,r,k) satisfies
// post_pred in s, the only admissible label is the matching Entry.
bool no_intervening_tla_ok(const HotelState& s, const ActionLabel& label, const HotelConfig& c);

// Joint relabeling of rooms and guests (keys are totally ordered and never
// permuted). Perms are bijections on the full universes.
HotelState apply_permutation(const HotelState& s,
                             const std::vector<int>& room_perm,
                             const std::vector<int>& guest_perm);
ActionLabel apply_permutation(const ActionLabel& label,
                              const std::vector<int>& room_perm,
                              const std::vector<int>& guest_perm);

} // namespace hotelck
