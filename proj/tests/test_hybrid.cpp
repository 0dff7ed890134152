// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <doctest.h>

#include "hotelck/hybrid.hpp"
#include "hotelck/render.hpp"
#include "hotelck/symmetry.hpp"
#include "test_util.hpp"

using namespace hotelck;
using namespace hotelck::test;

namespace {
const StepProperty kNoBadEntry = no_bad_entry_step;
}

TEST_CASE("derived generator matches the init enumeration") {
    const HotelConfig c = hotel_n(3);
    const auto plain = derive_initial_generator(c, false);
    CHECK(plain.size() == 776);
    CHECK(plain == initial_states(c));

    const auto canon = derive_initial_generator(c, true);
    CHECK(canon.size() == count_canonical_initial_states(c));
    for (const HotelState& s : canon)
        CHECK(canonicalize(s) == s);
    CHECK(std::is_sorted(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
        return encode_state(a) < encode_state(b);
    }));
}

TEST_CASE("hybrid verdict matches the monolithic search") {
    for (int n = 0; n <= 3; ++n) {
        for (bool ni : {false, true}) {
            HotelSystemOptions sys;
            sys.tla_no_intervening = ni;
            const CheckSemantics sem;
            const Verdict mono =
                bfs_check(make_hotel_system(hotel_n(n), sys), kNoBadEntry, "NoBadEntry", sem);
            HybridOptions opts;
            opts.tla_no_intervening = ni;
            opts.workers = 2;
            const auto [verdict, report] =
                hybrid_check(hotel_n(n), kNoBadEntry, "NoBadEntry", sem, opts);
            REQUIRE(verdict.kind == mono.kind);
            if (verdict.kind == VerdictKind::CounterExample) {
                REQUIRE(validate_trace(*verdict.trace, hotel_n(n)));
                CHECK(report.violating_tasks > 0);
            } else {
                CHECK(report.violating_tasks == 0);
            }
        }
    }
}

TEST_CASE("aggregation is deterministic across worker counts") {
    const HotelConfig c = hotel_n(3);
    const CheckSemantics sem;
    for (bool symmetry : {false, true}) {
        HybridOptions one;
        one.symmetry = symmetry;
        one.workers = 1;
        HybridOptions four = one;
        four.workers = 4;
        const auto [va, ra] = hybrid_check(c, kNoBadEntry, "NoBadEntry", sem, one);
        const auto [vb, rb] = hybrid_check(c, kNoBadEntry, "NoBadEntry", sem, four);
        CHECK(verdict_to_json(va).dump() == verdict_to_json(vb).dump());
        CHECK(hybrid_report_to_json(ra).dump() == hybrid_report_to_json(rb).dump());
    }
}

TEST_CASE("counter-example comes from the smallest violating initial state") {
    const HotelConfig c = hotel_n(3);
    const auto [verdict, report] = hybrid_check(c, kNoBadEntry, "NoBadEntry",
                                                CheckSemantics{}, HybridOptions{});
    REQUIRE(verdict.kind == VerdictKind::CounterExample);
    const std::string witness = encode_state(verdict.trace->states.front());
    for (const TaskReport& task : report.tasks) {
        if (task.initial_encoding == witness)
            break;
        CHECK(task.kind == VerdictKind::Verified);
    }
    CHECK(report.tasks.size() == 776);
    CHECK(report.violating_tasks > 0);
    CHECK(report.violating_tasks < 776);
}

TEST_CASE("empty universe runs one task") {
    const auto [verdict, report] = hybrid_check(HotelConfig{0, 0, 0, false}, kNoBadEntry,
                                                "NoBadEntry", CheckSemantics{}, HybridOptions{});
    CHECK(verdict.kind == VerdictKind::Verified);
    CHECK(report.tasks.size() == 1);
}

TEST_CASE("short_circuit skips later tasks but keeps a real counter-example") {
    const HotelConfig c = hotel_n(3);
    HybridOptions opts;
    opts.short_circuit = true;
    const auto [verdict, report] = hybrid_check(c, kNoBadEntry, "NoBadEntry",
                                                CheckSemantics{}, opts);
    REQUIRE(verdict.kind == VerdictKind::CounterExample);
    CHECK(validate_trace(*verdict.trace, c));
    const auto skipped = std::count_if(report.tasks.begin(), report.tasks.end(),
                                       [](const TaskReport& t) { return t.skipped; });
    CHECK(skipped > 0);
}

TEST_CASE("per-task resource errors degrade to depth-exhausted") {
    const HotelConfig c = hotel_n(3);
    CheckSemantics sem;
    sem.max_states = 5; // far below any per-task reachable count
    HybridOptions opts;
    opts.tla_no_intervening = true; // no violations to mask the exhaustion
    const auto [verdict, report] = hybrid_check(c, kNoBadEntry, "NoBadEntry", sem, opts);
    CHECK(verdict.kind == VerdictKind::DepthExhausted);
    CHECK(report.resource_errors > 0);
}
