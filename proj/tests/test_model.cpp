// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>

#include <doctest.h>

#include "hotelck/model.hpp"
#include "test_util.hpp"

using namespace hotelck;
using namespace hotelck::test;

TEST_CASE("next_key returns the smallest pool element above k") {
    CHECK(next_key(0, 0b111) == 1);
    CHECK(next_key(2, 0b111) == std::nullopt);
    CHECK(next_key(1, 0b1101) == 2);
    CHECK(next_key(0, 0) == std::nullopt);
    CHECK(next_key(3, 0b10000) == 4);
}

TEST_CASE("type_inv rejects overlapping pools") {
    HotelConfig c{.key_count = 1, .room_universe = 2, .guest_universe = 0};
    HotelState s = empty_state(c);
    s.rooms = 0b11;
    s.keys[0] = s.keys[1] = 0b1;
    s.current[0] = s.current[1] = 0;
    CHECK_FALSE(type_inv(s, c));
}

TEST_CASE("type_inv accepts the fully empty state") {
    HotelConfig c{.key_count = 3, .room_universe = 3, .guest_universe = 3};
    CHECK(type_inv(empty_state(c), c));
}

TEST_CASE("every enumerated initial state satisfies the type invariant") {
    for (int n = 0; n <= 3; ++n) {
        const HotelConfig c = hotel_n(n);
        enumerate_initial_states(c, [&](const HotelState& s) {
            REQUIRE(type_inv(s, c));
            REQUIRE(is_initial_state(s, c));
        });
    }
}

TEST_CASE("initial-state counts") {
    CHECK(initial_states(hotel_n(1)).size() == 4);
    CHECK(initial_states(hotel_n(3)).size() == 776);
    CHECK(initial_states(HotelConfig{0, 0, 0, false}).size() == 1);
}

TEST_CASE("initial enumeration is duplicate-free and sorted by encoding") {
    std::vector<std::string> encs;
    enumerate_initial_states(hotel_n(2), [&](const HotelState& s) {
        encs.push_back(encode_state(s));
    });
    CHECK(std::is_sorted(encs.begin(), encs.end()));
    CHECK(std::adjacent_find(encs.begin(), encs.end()) == encs.end());
}

TEST_CASE("exact scope fixes the room and guest sets") {
    const HotelConfig c = hotel_n(2, true); // 2 rooms, 2 guests, 4 keys
    enumerate_initial_states(c, [&](const HotelState& s) {
        REQUIRE(s.rooms == 0b11u);
        REQUIRE(s.guests == 0b11u);
    });
}

TEST_CASE("state encoding round-trips") {
    const HotelConfig c = hotel_n(3);
    enumerate_initial_states(c, [&](const HotelState& s) {
        REQUIRE(decode_state(encode_state(s), c) == s);
    });
}

TEST_CASE("only checkins are enabled in a fresh room") {
    const HotelConfig c = hotel_n(3);
    const HotelState s = one_room_two_guests();
    const auto steps = enabled_steps(s, c);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].label == ActionLabel::checkin(0, 0, 1));
    CHECK(steps[1].label == ActionLabel::checkin(1, 0, 1));
    CHECK(steps[0].target.occupant[0] == 0b01u);
    CHECK(steps[0].target.gkeys[0] == 0b010u);
    CHECK(steps[0].target.last[0] == 1);
}

TEST_CASE("no steps involve absent guests") {
    HotelConfig c = hotel_n(3);
    HotelState s = one_room_two_guests();
    s.guests = 0;
    CHECK(enabled_steps(s, c).empty());
}

TEST_CASE("the double-checkin prefix enables the bad entry") {
    // g0 checks in with k1 and leaves; g1 checks in with k2; the lock still
    // trusts k0, so g0's key k1 is the lock's next key and opens the door.
    const HotelConfig c = hotel_n(3);
    const HotelState s = replay(one_room_two_guests(), c,
                                {ActionLabel::checkin(0, 0, 1), ActionLabel::checkout(0),
                                 ActionLabel::checkin(1, 0, 2)});
    const auto bad = apply_label(s, c, ActionLabel::entry(0, 0, 1));
    REQUIRE(bad.has_value());
    CHECK(s.occupant[0] == 0b10u); // g1 occupies
    CHECK_FALSE(no_bad_entry_step(s, ActionLabel::entry(0, 0, 1), *bad));
}

TEST_CASE("post_pred holds exactly between checkin and the matching entry") {
    const HotelConfig c = hotel_n(3);
    const HotelState s0 = one_room_two_guests();
    CHECK_FALSE(post_pred(s0, 0, 0, 0)); // gkeys empty in initial states

    const HotelState s1 = replay(s0, c, {ActionLabel::checkin(0, 0, 1)});
    CHECK(post_pred(s1, 0, 0, 1));
    const HotelState s2 = replay(s1, c, {ActionLabel::entry(0, 0, 1)});
    CHECK_FALSE(post_pred(s2, 0, 0, 1)); // current[r] = k now
}

TEST_CASE("post_pred follows every checkin step") {
    const HotelConfig c = hotel_n(2);
    enumerate_initial_states(c, [&](const HotelState& s) {
        for (const Step& step : enabled_steps(s, c))
            if (step.label.kind == ActionKind::Checkin)
                CHECK(post_pred(step.target, step.label.guest, step.label.room, step.label.key));
    });
}

TEST_CASE("no_bad_entry_step constrains only entries into occupied rooms") {
    const HotelConfig c = hotel_n(3);
    const HotelState s = replay(one_room_two_guests(), c, {ActionLabel::checkin(0, 0, 1)});
    // Occupant re-entering is fine; checkout is never bad.
    const auto re = apply_label(s, c, ActionLabel::entry(0, 0, 1));
    REQUIRE(re.has_value());
    CHECK(no_bad_entry_step(s, ActionLabel::entry(0, 0, 1), *re));
    CHECK(no_bad_entry_step(s, ActionLabel::checkout(0), s));
    // Vacant room: any entry is fine.
    const HotelState v = one_room_two_guests();
    CHECK(no_bad_entry_step(v, ActionLabel::entry(0, 0, 0), v));
}

TEST_CASE("tla no-intervening forces the pending entry") {
    const HotelConfig c = hotel_n(3);
    const HotelState s = replay(one_room_two_guests(), c,
                                {ActionLabel::checkin(0, 0, 1), ActionLabel::checkout(0),
                                 ActionLabel::checkin(1, 0, 2)});
    // Post holds for exactly (g1, r0, k2).
    CHECK(post_pred(s, 1, 0, 2));
    CHECK(no_intervening_tla_ok(s, ActionLabel::entry(1, 0, 2), c));
    CHECK_FALSE(no_intervening_tla_ok(s, ActionLabel::checkout(1), c));
    CHECK_FALSE(no_intervening_tla_ok(s, ActionLabel::entry(0, 0, 1), c));
    // Initial states carry no obligation.
    const HotelState s0 = one_room_two_guests();
    CHECK(no_intervening_tla_ok(s0, ActionLabel::checkin(0, 0, 1), c));
}

TEST_CASE("action determinism: one successor per label") {
    const HotelConfig c = hotel_n(2);
    enumerate_initial_states(c, [&](const HotelState& s) {
        const auto steps = enabled_steps(s, c);
        for (std::size_t i = 1; i < steps.size(); ++i)
            REQUIRE(steps[i - 1].label < steps[i].label); // sorted and distinct
    });
}

TEST_CASE("frame exactness per action kind") {
    const HotelConfig c = hotel_n(2);
    enumerate_initial_states(c, [&](const HotelState& s0) {
        // Check two levels deep so entries and checkouts occur.
        for (const Step& first : enabled_steps(s0, c)) {
            for (const Step& step : enabled_steps(first.target, c)) {
                const HotelState& s = first.target;
                const HotelState& t = step.target;
                REQUIRE(t.keys == s.keys);
                REQUIRE(t.rooms == s.rooms);
                REQUIRE(t.guests == s.guests);
                switch (step.label.kind) {
                case ActionKind::Entry:
                    REQUIRE(t.last == s.last);
                    REQUIRE(t.occupant == s.occupant);
                    REQUIRE(t.gkeys == s.gkeys);
                    for (int r = 0; r < c.room_universe; ++r)
                        if (r != step.label.room)
                            REQUIRE(t.current[r] == s.current[r]);
                    break;
                case ActionKind::Checkout:
                    REQUIRE(t.last == s.last);
                    REQUIRE(t.current == s.current);
                    REQUIRE(t.gkeys == s.gkeys);
                    break;
                case ActionKind::Checkin:
                    REQUIRE(t.current == s.current);
                    for (int r = 0; r < c.room_universe; ++r)
                        if (r != step.label.room) {
                            REQUIRE(t.last[r] == s.last[r]);
                            REQUIRE(t.occupant[r] == s.occupant[r]);
                        }
                    for (int g = 0; g < c.guest_universe; ++g)
                        if (g != step.label.guest)
                            REQUIRE(t.gkeys[g] == s.gkeys[g]);
                    break;
                }
            }
        }
    });
}

TEST_CASE("type invariant is preserved and gkeys/last grow along steps") {
    const HotelConfig c = hotel_n(2);
    for (const std::string& enc : reachable_set(c)) {
        const HotelState s = decode_state(enc, c);
        REQUIRE(type_inv(s, c));
        for (const Step& step : enabled_steps(s, c)) {
            REQUIRE(type_inv(step.target, c));
            for (int g = 0; g < c.guest_universe; ++g)
                REQUIRE((step.target.gkeys[g] & s.gkeys[g]) == s.gkeys[g]);
            if (step.label.kind == ActionKind::Checkin)
                REQUIRE(step.target.last[step.label.room] > s.last[step.label.room]);
        }
    }
}

TEST_CASE("enabled_steps is equivariant under room/guest relabeling") {
    const HotelConfig c = hotel_n(2);
    std::vector<int> rp = identity(c.room_universe);
    auto as_set = [&](std::vector<Step> steps) {
        std::vector<std::pair<ActionLabel, std::string>> out;
        for (auto& st : steps)
            out.emplace_back(st.label, encode_state(st.target));
        std::sort(out.begin(), out.end());
        return out;
    };
    enumerate_initial_states(c, [&](const HotelState& s) {
        do {
            std::vector<int> gp = identity(c.guest_universe);
            do {
                const HotelState ps = apply_permutation(s, rp, gp);
                std::vector<Step> mapped;
                for (const Step& st : enabled_steps(s, c))
                    mapped.push_back({apply_permutation(st.label, rp, gp),
                                      apply_permutation(st.target, rp, gp)});
                REQUIRE(as_set(enabled_steps(ps, c)) == as_set(std::move(mapped)));
            } while (std::next_permutation(gp.begin(), gp.end()));
        } while (std::next_permutation(rp.begin(), rp.end()));
    });
}
