// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hotelck/bounded.hpp"
#include "hotelck/checker.hpp"
#include "hotelck/render.hpp"
#include "test_util.hpp"

using namespace hotelck;
using namespace hotelck::test;

TEST_CASE("state json round-trips byte-identically") {
    const HotelConfig c = hotel_n(3);
    enumerate_initial_states(c, [&](const HotelState& s) {
        const nlohmann::json j = state_to_json(s);
        const HotelState back = state_from_json(j, c);
        REQUIRE(back == s);
        REQUIRE(state_to_json(back).dump() == j.dump());
    });
}

TEST_CASE("label json round-trips for all three kinds") {
    for (const ActionLabel& label :
         {ActionLabel::entry(1, 2, 0), ActionLabel::checkin(0, 1, 2), ActionLabel::checkout(2)}) {
        const nlohmann::json j = label_to_json(label);
        CHECK(label_from_json(j) == label);
        CHECK(label_to_json(label_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("trace json round-trips through parse, validate, re-serialize") {
    const HotelConfig c = hotel_n(3);
    const Verdict v = bfs_check(make_hotel_system(c, {}), no_bad_entry_step, "NoBadEntry",
                                CheckSemantics{});
    REQUIRE(v.trace.has_value());
    const std::string dumped = trace_to_json(*v.trace).dump();
    const Trace parsed = trace_from_json(nlohmann::json::parse(dumped), c);
    REQUIRE(validate_trace(parsed, c));
    CHECK(trace_to_json(parsed).dump() == dumped);
}

TEST_CASE("verdict json carries kind, stats and the violated property") {
    const HotelConfig c = hotel_n(3);
    const Verdict v = bfs_check(make_hotel_system(c, {}), no_bad_entry_step, "NoBadEntry",
                                CheckSemantics{});
    const nlohmann::json j = verdict_to_json(v);
    CHECK(j.at("verdict") == "counter_example");
    CHECK(j.at("violated_property") == "NoBadEntry");
    CHECK(j.at("stats").at("states").get<std::uint64_t>() == v.stats.states_explored);
    CHECK(j.at("trace").at("states").size() == 5);

    const Verdict ok = bounded_check(make_hotel_system(c, {}), no_bad_entry_step,
                                     "NoBadEntry", 4, false);
    const nlohmann::json jo = verdict_to_json(ok);
    CHECK(jo.at("verdict") == "verified");
    CHECK_FALSE(jo.contains("trace"));
}

TEST_CASE("trace text format renders one block per instant") {
    const HotelConfig c = hotel_n(3);
    const Verdict v = bfs_check(make_hotel_system(c, {}), no_bad_entry_step, "NoBadEntry",
                                CheckSemantics{});
    const std::string text = render_trace_text(*v.trace);
    for (std::size_t i = 0; i < v.trace->states.size(); ++i) {
        const std::string marker = "--- instant " + std::to_string(i) + " ---";
        CHECK(text.find(marker) != std::string::npos);
    }
    CHECK(text.find("--- instant 5 ---") == std::string::npos);
    // Every label appears in its rendered form.
    for (const ActionLabel& label : v.trace->labels)
        CHECK(text.find(to_string(label)) != std::string::npos);
}

TEST_CASE("state text lists rooms with their lock and pool") {
    const std::string text = render_state_text(one_room_two_guests());
    CHECK(text.find("r0") != std::string::npos);
    CHECK(text.find("g0") != std::string::npos);
    CHECK(text.find("g1") != std::string::npos);
}
