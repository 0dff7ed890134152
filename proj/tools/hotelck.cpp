// SPDX-License-Identifier: Apache-2.0
//
// hotelck command-line surface: enumerate initial states, run checks
// (bfs / dfs / bounded / hybrid), and emit CSV experiment sweeps.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hotelck/bounded.hpp"
#include "hotelck/checker.hpp"
#include "hotelck/hybrid.hpp"
#include "hotelck/render.hpp"
#include "hotelck/symmetry.hpp"

namespace {

using namespace hotelck;

constexpr int kExitVerified = 0;
constexpr int kExitCounterExample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;
constexpr int kExitResource = 4;

struct ConfigFlags {
    int n = -1;
    int keys = -1, rooms = -1, guests = -1;
    bool exact_scope = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("-n,--n", n, "shorthand: keys = rooms = guests = n (keys = n+2 with --exact-scope)");
        cmd.add_option("--keys", keys, "number of keys");
        cmd.add_option("--rooms", rooms, "size of the room universe");
        cmd.add_option("--guests", guests, "size of the guest universe");
        cmd.add_flag("--exact-scope", exact_scope,
                     "initial states use the full room/guest universes");
    }

    HotelConfig resolve() const {
        HotelConfig c;
        if (n >= 0) {
            c.key_count = exact_scope ? n + 2 : n;
            c.room_universe = n;
            c.guest_universe = n;
        }
        if (keys >= 0)
            c.key_count = keys;
        if (rooms >= 0)
            c.room_universe = rooms;
        if (guests >= 0)
            c.guest_universe = guests;
        c.exact_scope = exact_scope;
        c.validate();
        return c;
    }
};

nlohmann::json config_to_json(const HotelConfig& c) {
    return {{"keys", c.key_count},
            {"rooms", c.room_universe},
            {"guests", c.guest_universe},
            {"exact_scope", c.exact_scope}};
}

std::string one_line_state(const HotelState& s) {
    return state_to_json(s).dump();
}

int exit_code_for(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Verified: return kExitVerified;
    case VerdictKind::CounterExample: return kExitCounterExample;
    case VerdictKind::Deadlock: return kExitCounterExample;
    case VerdictKind::DepthExhausted: return kExitExhausted;
    }
    return kExitUsage;
}

struct CheckFlags {
    ConfigFlags config;
    std::string mode = "bfs";
    std::uint32_t trace_len = 30;
    std::uint32_t depth = 100;
    std::string no_intervening = "off";
    std::string stutter = "label";
    std::string deadlock = "ignore";
    bool strict_delta_deadlock = false;
    bool symmetry = false;
    unsigned workers = 1;
    bool short_circuit = false;
    std::string format = "text";
    std::uint64_t max_states = 0;
    bool fingerprints = false;

    void attach(CLI::App& cmd) {
        config.attach(cmd);
        cmd.add_option("--mode", mode, "bfs | dfs | bounded | hybrid")
            ->check(CLI::IsMember({"bfs", "dfs", "bounded", "hybrid"}));
        cmd.add_option("--trace-len", trace_len, "exact trace length bound (bounded mode)");
        cmd.add_option("--depth", depth, "maximum depth (dfs mode)");
        cmd.add_option("--no-intervening", no_intervening, "off | alloy | tla")
            ->check(CLI::IsMember({"off", "alloy", "tla"}));
        cmd.add_option("--stutter", stutter, "label | delta")
            ->check(CLI::IsMember({"label", "delta"}));
        cmd.add_option("--deadlock", deadlock, "ignore | flag")
            ->check(CLI::IsMember({"ignore", "flag"}));
        cmd.add_flag("--strict-delta-deadlock", strict_delta_deadlock,
                     "in delta mode, self-loop-only states count as deadlocked");
        cmd.add_flag("--symmetry", symmetry, "fold the visited store through canonicalization"
                                             " (hybrid: deduplicate initial states)");
        cmd.add_option("--workers", workers, "worker pool size (hybrid mode)");
        cmd.add_flag("--short-circuit", short_circuit,
                     "hybrid: stop at first violation (forfeits determinism)");
        cmd.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd.add_option("--max-states", max_states, "abort after this many stored states (0 = off)");
        cmd.add_flag("--fingerprints", fingerprints,
                     "64-bit fingerprint visited store (unsound under collision)");
    }

    CheckSemantics semantics() const {
        CheckSemantics sem;
        sem.stutter = stutter == "delta" ? StutterMode::Delta : StutterMode::LabelAware;
        sem.deadlock = deadlock == "flag" ? DeadlockPolicy::Flag : DeadlockPolicy::Ignore;
        sem.strict_delta_deadlock = strict_delta_deadlock;
        sem.search = mode == "dfs" ? SearchOrder::Dfs : SearchOrder::Bfs;
        sem.max_depth = depth;
        sem.max_states = max_states;
        sem.fingerprint_store = fingerprints;
        return sem;
    }

    nlohmann::json semantics_json() const {
        nlohmann::json j{{"mode", mode},
                         {"no_intervening", no_intervening},
                         {"stutter", stutter},
                         {"deadlock", deadlock}};
        if (mode == "bounded")
            j["trace_len"] = trace_len;
        if (mode == "dfs")
            j["depth"] = depth;
        if (mode == "hybrid") {
            j["workers"] = workers;
            j["symmetry"] = symmetry;
        }
        return j;
    }
};

struct RunResult {
    Verdict verdict;
    nlohmann::json extra; // tasks / per-t report
};

RunResult run_check(const HotelConfig& c, const CheckFlags& flags) {
    const StepProperty property = no_bad_entry_step;
    const std::string property_name = "NoBadEntry";
    const CheckSemantics sem = flags.semantics();

    if (flags.mode == "bounded") {
        const TransitionSystem ts = make_hotel_system(c, {});
        auto [verdict, report] =
            bounded_sweep(ts, property, property_name, flags.trace_len,
                          flags.no_intervening == "alloy");
        nlohmann::json per_t = nlohmann::json::array();
        for (const auto& e : report.per_t)
            per_t.push_back({{"t", e.t},
                             {"verdict", verdict_kind_name(e.kind)},
                             {"ce_length", e.ce_states}});
        return {std::move(verdict), {{"per_t", std::move(per_t)}}};
    }
    if (flags.mode == "hybrid") {
        HybridOptions opts;
        opts.symmetry = flags.symmetry;
        opts.workers = flags.workers;
        opts.tla_no_intervening = flags.no_intervening == "tla";
        opts.short_circuit = flags.short_circuit;
        auto [verdict, report] = hybrid_check(c, property, property_name, sem, opts);
        return {std::move(verdict), hybrid_report_to_json(report)};
    }
    HotelSystemOptions sys_opts;
    sys_opts.tla_no_intervening = flags.no_intervening == "tla";
    sys_opts.symmetry_fold = flags.symmetry;
    const TransitionSystem ts = make_hotel_system(c, sys_opts);
    Verdict verdict = flags.mode == "dfs" ? dfs_check(ts, property, property_name, sem)
                                          : bfs_check(ts, property, property_name, sem);
    return {std::move(verdict), nlohmann::json::object()};
}

int cmd_check(const CheckFlags& flags) {
    if (flags.no_intervening == "alloy" && flags.mode != "bounded") {
        std::cerr << "error: --no-intervening alloy requires --mode bounded\n";
        return kExitUsage;
    }
    if (flags.no_intervening == "tla" && flags.mode == "bounded") {
        std::cerr << "error: --no-intervening tla is not available in bounded mode"
                     " (use alloy)\n";
        return kExitUsage;
    }
    HotelConfig c;
    try {
        c = flags.config.resolve();
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }

    try {
        RunResult result = run_check(c, flags);
        const Verdict& v = result.verdict;
        if (flags.format == "json") {
            nlohmann::json j = verdict_to_json(v);
            j["config"] = config_to_json(c);
            j["semantics"] = flags.semantics_json();
            for (auto& [key, value] : result.extra.items())
                j["stats"][key] = value;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << verdict_kind_name(v.kind) << "\n";
            std::cout << "states explored: " << v.stats.states_explored
                      << "  diameter: " << v.stats.diameter << "\n";
            if (v.trace) {
                if (v.kind == VerdictKind::CounterExample)
                    std::cout << "violated property: " << v.violated_property << "\n";
                std::cout << "trace (" << v.trace->states.size() << " states):\n\n"
                          << render_trace_text(*v.trace);
            }
            if (result.extra.contains("per_t"))
                for (const auto& e : result.extra["per_t"])
                    std::cout << "t=" << e["t"].get<int>() << ": "
                              << e["verdict"].get<std::string>() << "\n";
            if (result.extra.contains("violating_tasks"))
                std::cout << "violating tasks: " << result.extra["violating_tasks"].get<std::uint64_t>()
                          << " / " << result.extra["task_count"].get<std::uint64_t>() << "\n";
        }
        return exit_code_for(v.kind);
    } catch (const ResourceLimitError& err) {
        std::cerr << "resource limit: " << err.what() << "\n";
        return kExitResource;
    }
}

struct EnumerateFlags {
    ConfigFlags config;
    bool symmetry = false;
    bool list = false;
};

int cmd_enumerate(const EnumerateFlags& flags) {
    HotelConfig c;
    try {
        c = flags.config.resolve();
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    if (flags.list) {
        for (const HotelState& s : derive_initial_generator(c, flags.symmetry))
            std::cout << one_line_state(s) << "\n";
        return kExitVerified;
    }
    if (flags.symmetry) {
        std::cout << count_canonical_initial_states(c) << "\n";
    } else {
        std::uint64_t count = 0;
        enumerate_initial_states(c, [&](const HotelState&) { ++count; });
        std::cout << count << "\n";
    }
    return kExitVerified;
}

struct SweepFlags {
    int n_min = 1;
    int n_max = 0;
    bool exact_scope = false;
    std::vector<std::string> modes{"bfs"};
    std::vector<std::string> no_intervening{"off"};
    std::string stutter = "label";
    std::uint32_t t_max = 7;
    std::uint32_t depth = 100;
};

int cmd_sweep(const SweepFlags& flags) {
    std::cout << "mode,n,keys,rooms,guests,exact_scope,no_intervening,stutter,"
                 "t_or_depth,verdict,ce_length,states_explored,ms\n";
    const StepProperty property = no_bad_entry_step;
    for (int n = flags.n_min; n <= flags.n_max; ++n) {
        HotelConfig c;
        c.key_count = flags.exact_scope ? n + 2 : n;
        c.room_universe = n;
        c.guest_universe = n;
        c.exact_scope = flags.exact_scope;
        c.validate();
        for (const std::string& mode : flags.modes) {
            for (const std::string& ni : flags.no_intervening) {
                // alloy is bounded-only, tla is unbounded-only
                if (ni == "alloy" && mode != "bounded")
                    continue;
                if (ni == "tla" && mode == "bounded")
                    continue;
                CheckSemantics sem;
                sem.stutter = flags.stutter == "delta" ? StutterMode::Delta
                                                       : StutterMode::LabelAware;
                sem.search = mode == "dfs" ? SearchOrder::Dfs : SearchOrder::Bfs;
                sem.max_depth = flags.depth;
                auto emit_row = [&](std::uint32_t t_or_depth, const Verdict& v, double ms) {
                    const std::int64_t ce_len =
                        v.trace ? static_cast<std::int64_t>(v.trace->states.size()) : -1;
                    std::cout << mode << "," << n << "," << c.key_count << ","
                              << c.room_universe << "," << c.guest_universe << ","
                              << (c.exact_scope ? 1 : 0) << "," << ni << "," << flags.stutter
                              << "," << t_or_depth << "," << verdict_kind_name(v.kind) << ","
                              << ce_len << "," << v.stats.states_explored << "," << ms << "\n";
                };
                const auto start = std::chrono::steady_clock::now();
                auto elapsed_ms = [&]() {
                    return std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                        .count();
                };
                if (mode == "bounded") {
                    const TransitionSystem ts = make_hotel_system(c, {});
                    for (std::uint32_t t = 1; t <= flags.t_max; ++t) {
                        const Verdict v =
                            bounded_check(ts, property, "NoBadEntry", t, ni == "alloy");
                        emit_row(t, v, elapsed_ms());
                        if (v.kind == VerdictKind::CounterExample)
                            break;
                    }
                } else if (mode == "hybrid") {
                    HybridOptions opts;
                    opts.tla_no_intervening = ni == "tla";
                    auto [v, report] = hybrid_check(c, property, "NoBadEntry", sem, opts);
                    emit_row(0, v, elapsed_ms());
                } else {
                    HotelSystemOptions sys_opts;
                    sys_opts.tla_no_intervening = ni == "tla";
                    const TransitionSystem ts = make_hotel_system(c, sys_opts);
                    const Verdict v = mode == "dfs" ? dfs_check(ts, property, "NoBadEntry", sem)
                                                    : bfs_check(ts, property, "NoBadEntry", sem);
                    emit_row(mode == "dfs" ? flags.depth : 0, v, elapsed_ms());
                }
            }
        }
    }
    return kExitVerified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hotel room locking system model-checking workbench"};
    app.require_subcommand(1);

    EnumerateFlags enum_flags;
    CLI::App* enumerate = app.add_subcommand("enumerate", "count or list initial states");
    enum_flags.config.attach(*enumerate);
    enumerate->add_flag("--symmetry", enum_flags.symmetry, "count canonical representatives");
    enumerate->add_flag("--list", enum_flags.list, "print states, one JSON object per line");

    CheckFlags check_flags;
    CLI::App* check = app.add_subcommand("check", "check NoBadEntry");
    check_flags.attach(*check);

    SweepFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "CSV experiment grid");
    sweep->add_option("--n-min", sweep_flags.n_min, "smallest n");
    sweep->add_option("--n-max", sweep_flags.n_max, "largest n (empty grid when < n-min)");
    sweep->add_flag("--exact-scope", sweep_flags.exact_scope, "exact-scope variant (keys = n+2)");
    sweep->add_option("--mode", sweep_flags.modes, "modes to run (repeatable)")
        ->check(CLI::IsMember({"bfs", "dfs", "bounded", "hybrid"}));
    sweep->add_option("--no-intervening", sweep_flags.no_intervening,
                      "NoIntervening settings to run (repeatable)")
        ->check(CLI::IsMember({"off", "alloy", "tla"}));
    sweep->add_option("--stutter", sweep_flags.stutter, "label | delta")
        ->check(CLI::IsMember({"label", "delta"}));
    sweep->add_option("--t-max", sweep_flags.t_max, "bounded: sweep t = 1..t-max");
    sweep->add_option("--depth", sweep_flags.depth, "dfs depth bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(enum_flags);
        if (check->parsed())
            return cmd_check(check_flags);
        return cmd_sweep(sweep_flags);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}
