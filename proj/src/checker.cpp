// SPDX-License-Identifier: Apache-2.0

#include "hotelck/checker.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "hotelck/symmetry.hpp"

namespace hotelck {

Verdict Verdict::verified(CheckStats stats) {
    Verdict v;
    v.kind = VerdictKind::Verified;
    v.stats = stats;
    return v;
}

Verdict Verdict::counter_example(Trace trace, std::string property, CheckStats stats) {
    Verdict v;
    v.kind = VerdictKind::CounterExample;
    v.trace = std::move(trace);
    v.violated_property = std::move(property);
    v.stats = stats;
    return v;
}

Verdict Verdict::depth_exhausted(std::uint32_t max_depth, CheckStats stats) {
    Verdict v;
    v.kind = VerdictKind::DepthExhausted;
    v.max_depth = max_depth;
    v.stats = stats;
    return v;
}

Verdict Verdict::deadlock(Trace trace, CheckStats stats) {
    Verdict v;
    v.kind = VerdictKind::Deadlock;
    v.trace = std::move(trace);
    v.stats = stats;
    return v;
}

std::string verdict_kind_name(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Verified: return "verified";
    case VerdictKind::CounterExample: return "counter_example";
    case VerdictKind::DepthExhausted: return "depth_exhausted";
    case VerdictKind::Deadlock: return "deadlock";
    }
    return "?";
}

bool validate_trace(const Trace& trace, const HotelConfig& c, bool check_init) {
    if (trace.states.empty() || trace.labels.size() + 1 != trace.states.size())
        return false;
    if (check_init && !is_initial_state(trace.states.front(), c))
        return false;
    for (std::size_t i = 0; i < trace.labels.size(); ++i) {
        const auto steps = enabled_steps(trace.states[i], c);
        const auto it = std::find_if(steps.begin(), steps.end(), [&](const Step& st) {
            return st.label == trace.labels[i];
        });
        if (it == steps.end() || !(it->target == trace.states[i + 1]))
            return false;
    }
    return true;
}

ResourceLimitError::ResourceLimitError(std::uint64_t explored, std::uint64_t lim)
    : std::runtime_error("state limit of " + std::to_string(lim) + " exceeded after exploring " +
                         std::to_string(explored) + " states"),
      states_explored(explored), limit(lim) {}

TransitionSystem make_hotel_system(const HotelConfig& c, const HotelSystemOptions& opts) {
    c.validate();
    TransitionSystem ts;
    if (opts.fixed_initial) {
        HotelState fixed = *opts.fixed_initial;
        ts.initial = [fixed](const std::function<void(const HotelState&)>& sink) { sink(fixed); };
    } else {
        ts.initial = [c](const std::function<void(const HotelState&)>& sink) {
            enumerate_initial_states(c, sink);
        };
    }
    if (opts.tla_no_intervening) {
        ts.successors = [c](const HotelState& s) {
            std::vector<Step> steps = enabled_steps(s, c);
            std::erase_if(steps, [&](const Step& st) {
                return !no_intervening_tla_ok(s, st.label, c);
            });
            return steps;
        };
    } else {
        ts.successors = [c](const HotelState& s) { return enabled_steps(s, c); };
    }
    ts.encode = [](const HotelState& s) { return encode_state(s); };
    if (opts.symmetry_fold)
        ts.canonical = [](const HotelState& s) { return canonicalize(s); };
    return ts;
}

namespace {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

struct Record {
    std::string pred_key; // empty for initial states
    ActionLabel label;
    HotelState state;
    std::uint32_t depth = 0;
    bool is_initial = false;
};

struct Search {
    const TransitionSystem& ts;
    const CheckSemantics& sem;
    std::unordered_map<std::string, Record> visited;

    explicit Search(const TransitionSystem& ts, const CheckSemantics& sem) : ts(ts), sem(sem) {}

    std::string key_of(const HotelState& s) const {
        std::string enc = ts.canonical ? ts.encode(ts.canonical(s)) : ts.encode(s);
        if (!sem.fingerprint_store)
            return enc;
        const std::uint64_t fp = fnv1a64(enc);
        return std::string(reinterpret_cast<const char*>(&fp), sizeof fp);
    }

    void check_limit() const {
        if (sem.max_states && visited.size() > sem.max_states)
            throw ResourceLimitError(visited.size(), sem.max_states);
    }

    // Path from an initial state to the stored state of `key`.
    Trace trace_to(const std::string& key) const {
        Trace trace;
        std::string cur = key;
        while (true) {
            const Record& rec = visited.at(cur);
            trace.states.push_back(rec.state);
            if (rec.is_initial)
                break;
            trace.labels.push_back(rec.label);
            cur = rec.pred_key;
        }
        std::reverse(trace.states.begin(), trace.states.end());
        std::reverse(trace.labels.begin(), trace.labels.end());
        return trace;
    }

    Trace trace_with_step(const std::string& source_key, const ActionLabel& label,
                          const HotelState& target) const {
        Trace trace = trace_to(source_key);
        trace.labels.push_back(label);
        trace.states.push_back(target);
        return trace;
    }

    bool is_stutter(const HotelState& s, const HotelState& target) const {
        return sem.stutter == StutterMode::Delta && target == s;
    }

    bool deadlocked(const HotelState& s, const std::vector<Step>& steps) const {
        if (steps.empty())
            return true;
        if (sem.stutter == StutterMode::Delta && sem.strict_delta_deadlock)
            return std::all_of(steps.begin(), steps.end(),
                               [&](const Step& st) { return st.target == s; });
        return false;
    }

    CheckStats stats(std::uint32_t diameter, std::uint64_t deadlocks) const {
        return {visited.size(), diameter, deadlocks};
    }
};

} // namespace

Verdict bfs_check(const TransitionSystem& ts, const StepProperty& property,
                  const std::string& property_name, const CheckSemantics& sem) {
    Search search(ts, sem);
    std::deque<std::string> frontier;
    std::uint32_t diameter = 0;
    std::uint64_t deadlocks = 0;

    ts.initial([&](const HotelState& s) {
        std::string key = search.key_of(s);
        if (search.visited.emplace(key, Record{"", {}, s, 0, true}).second) {
            search.check_limit();
            frontier.push_back(std::move(key));
        }
    });

    while (!frontier.empty()) {
        const std::string key = std::move(frontier.front());
        frontier.pop_front();
        // Copy: inserting below may rehash the map.
        const Record rec = search.visited.at(key);
        const HotelState& s = rec.state;
        diameter = std::max(diameter, rec.depth);

        const std::vector<Step> steps = ts.successors(s);
        for (const Step& step : steps) {
            if (!search.is_stutter(s, step.target)) {
                if (property && !property(s, step.label, step.target))
                    return Verdict::counter_example(
                        search.trace_with_step(key, step.label, step.target), property_name,
                        search.stats(diameter, deadlocks));
            }
            if (step.target == s)
                continue; // self-loop: source already visited
            std::string k2 = search.key_of(step.target);
            if (search.visited.emplace(k2, Record{key, step.label, step.target, rec.depth + 1, false})
                    .second) {
                search.check_limit();
                diameter = std::max(diameter, rec.depth + 1);
                frontier.push_back(std::move(k2));
            }
        }

        if (search.deadlocked(s, steps)) {
            ++deadlocks;
            if (sem.deadlock == DeadlockPolicy::Flag)
                return Verdict::deadlock(search.trace_to(key), search.stats(diameter, deadlocks));
        }
    }
    return Verdict::verified(search.stats(diameter, deadlocks));
}

Verdict dfs_check(const TransitionSystem& ts, const StepProperty& property,
                  const std::string& property_name, const CheckSemantics& sem) {
    if (sem.max_depth < 1)
        throw std::invalid_argument("dfs max_depth must be >= 1");
    Search search(ts, sem);
    std::vector<std::pair<std::string, std::uint32_t>> stack;
    std::uint32_t diameter = 0;
    std::uint64_t deadlocks = 0;
    bool cut = false;

    std::vector<std::string> init_keys;
    ts.initial([&](const HotelState& s) {
        std::string key = search.key_of(s);
        if (search.visited.emplace(key, Record{"", {}, s, 0, true}).second) {
            search.check_limit();
            init_keys.push_back(std::move(key));
        }
    });
    for (auto it = init_keys.rbegin(); it != init_keys.rend(); ++it)
        stack.emplace_back(std::move(*it), 0);

    while (!stack.empty()) {
        auto [key, depth] = std::move(stack.back());
        stack.pop_back();
        const Record rec = search.visited.at(key);
        if (rec.depth != depth)
            continue; // stale entry: state was re-reached at a smaller depth
        const HotelState& s = rec.state;
        diameter = std::max(diameter, depth);

        const std::vector<Step> steps = ts.successors(s);

        if (search.deadlocked(s, steps)) {
            ++deadlocks;
            if (sem.deadlock == DeadlockPolicy::Flag)
                return Verdict::deadlock(search.trace_to(key), search.stats(diameter, deadlocks));
        }

        if (depth == sem.max_depth) {
            // Not expanded; any unevaluated step means the frontier was cut.
            const bool pending = std::any_of(steps.begin(), steps.end(), [&](const Step& st) {
                return !search.is_stutter(s, st.target);
            });
            cut = cut || pending;
            continue;
        }

        // Push in reverse so the lexicographically-first label is explored first.
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            const Step& step = *it;
            if (!search.is_stutter(s, step.target)) {
                if (property && !property(s, step.label, step.target))
                    return Verdict::counter_example(
                        search.trace_with_step(key, step.label, step.target), property_name,
                        search.stats(diameter, deadlocks));
            }
            if (step.target == s)
                continue;
            std::string k2 = search.key_of(step.target);
            auto [pos, inserted] = search.visited.emplace(
                k2, Record{key, step.label, step.target, depth + 1, false});
            if (!inserted) {
                if (pos->second.depth <= depth + 1)
                    continue;
                // Re-reach at a smaller depth: update the record and revisit.
                pos->second.pred_key = key;
                pos->second.label = step.label;
                pos->second.depth = depth + 1;
            } else {
                search.check_limit();
            }
            stack.emplace_back(std::move(k2), depth + 1);
        }
    }
    if (cut)
        return Verdict::depth_exhausted(sem.max_depth, search.stats(diameter, deadlocks));
    return Verdict::verified(search.stats(diameter, deadlocks));
}

ReachStats reachable_stats(const TransitionSystem& ts, const CheckSemantics& sem) {
    CheckSemantics bfs_sem = sem;
    bfs_sem.deadlock = DeadlockPolicy::Ignore;
    const Verdict v = bfs_check(ts, nullptr, "", bfs_sem);
    return {v.stats.states_explored, v.stats.diameter, v.stats.deadlocks};
}

} // namespace hotelck
