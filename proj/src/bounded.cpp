// SPDX-License-Identifier: Apache-2.0

#include "hotelck/bounded.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace hotelck {

namespace {

// Exact-length search frame: the pending look-ahead obligation is the
// Checkin label whose matching Entry must come next (when the trace goes on).
using Obligation = std::optional<ActionLabel>;

struct BoundedSearch {
    const TransitionSystem& ts;
    const StepProperty& property;
    bool alloy_ni;
    std::unordered_map<std::string, bool> memo_complete;
    std::unordered_map<std::string, bool> memo_violate;

    std::string node_key(const HotelState& s, const Obligation& o, std::uint32_t remaining) const {
        std::string key = ts.encode(s);
        if (o) {
            key.push_back(1);
            key.push_back(static_cast<char>(o->guest));
            key.push_back(static_cast<char>(o->room));
            key.push_back(static_cast<char>(o->key));
        } else {
            key.append(4, '\0');
        }
        key.push_back(static_cast<char>(remaining));
        return key;
    }

    bool allowed(const Obligation& o, const ActionLabel& label) const {
        if (!alloy_ni || !o)
            return true;
        return label == ActionLabel::entry(o->guest, o->room, o->key);
    }

    Obligation next_obligation(const ActionLabel& label) const {
        if (alloy_ni && label.kind == ActionKind::Checkin)
            return label;
        return std::nullopt;
    }

    // Can the trace be completed with exactly `remaining` more steps?
    bool can_complete(const HotelState& s, const Obligation& o, std::uint32_t remaining) {
        if (remaining == 0)
            return true;
        const std::string key = node_key(s, o, remaining);
        if (auto it = memo_complete.find(key); it != memo_complete.end())
            return it->second;
        memo_complete.emplace(key, false); // settle recursion; graph is acyclic in `remaining`
        bool result = false;
        for (const Step& step : ts.successors(s)) {
            if (!allowed(o, step.label))
                continue;
            if (can_complete(step.target, next_obligation(step.label), remaining - 1)) {
                result = true;
                break;
            }
        }
        memo_complete[key] = result;
        return result;
    }

    // Can the trace be completed with exactly `remaining` more steps, at
    // least one of which violates the property?
    bool can_violate(const HotelState& s, const Obligation& o, std::uint32_t remaining) {
        if (remaining == 0)
            return false;
        const std::string key = node_key(s, o, remaining);
        if (auto it = memo_violate.find(key); it != memo_violate.end())
            return it->second;
        memo_violate.emplace(key, false);
        bool result = false;
        for (const Step& step : ts.successors(s)) {
            if (!allowed(o, step.label))
                continue;
            const Obligation o2 = next_obligation(step.label);
            const bool bad = !property(s, step.label, step.target);
            if ((bad && can_complete(step.target, o2, remaining - 1)) ||
                can_violate(step.target, o2, remaining - 1)) {
                result = true;
                break;
            }
        }
        memo_violate[key] = result;
        return result;
    }

    // Walks the lexicographically-first violating completion from s0.
    Trace reconstruct(const HotelState& s0, std::uint32_t steps) {
        Trace trace;
        trace.states.push_back(s0);
        HotelState s = s0;
        Obligation o;
        bool violated = false;
        for (std::uint32_t remaining = steps; remaining > 0; --remaining) {
            bool advanced = false;
            for (const Step& step : ts.successors(s)) {
                if (!allowed(o, step.label))
                    continue;
                const Obligation o2 = next_obligation(step.label);
                const bool bad = !property(s, step.label, step.target);
                const bool viable = (violated || bad)
                                        ? can_complete(step.target, o2, remaining - 1)
                                        : can_violate(step.target, o2, remaining - 1);
                if (!viable)
                    continue;
                violated = violated || bad;
                trace.labels.push_back(step.label);
                trace.states.push_back(step.target);
                o = o2;
                s = trace.states.back();
                advanced = true;
                break;
            }
            if (!advanced)
                throw std::logic_error("bounded reconstruction lost the witness");
        }
        return trace;
    }

    CheckStats stats(std::uint32_t t) const {
        return {memo_complete.size() + memo_violate.size(), t > 0 ? t - 1 : 0, 0};
    }
};

} // namespace

Verdict bounded_check(const TransitionSystem& ts, const StepProperty& property,
                      const std::string& property_name, std::uint32_t t,
                      bool alloy_no_intervening) {
    if (t < 1)
        throw std::invalid_argument("trace length must be >= 1");
    BoundedSearch search{ts, property, alloy_no_intervening, {}, {}};
    std::optional<Trace> found;
    ts.initial([&](const HotelState& s) {
        if (found)
            return;
        if (search.can_violate(s, std::nullopt, t - 1))
            found = search.reconstruct(s, t - 1);
    });
    if (found)
        return Verdict::counter_example(std::move(*found), property_name, search.stats(t));
    return Verdict::verified(search.stats(t));
}

std::pair<Verdict, SweepReport> bounded_sweep(const TransitionSystem& ts,
                                              const StepProperty& property,
                                              const std::string& property_name,
                                              std::uint32_t t_max,
                                              bool alloy_no_intervening) {
    if (t_max < 1)
        throw std::invalid_argument("t_max must be >= 1");
    SweepReport report;
    Verdict last;
    CheckStats aggregate;
    for (std::uint32_t t = 1; t <= t_max; ++t) {
        last = bounded_check(ts, property, property_name, t, alloy_no_intervening);
        aggregate.states_explored += last.stats.states_explored;
        aggregate.diameter = std::max(aggregate.diameter, last.stats.diameter);
        SweepEntry entry{t, last.kind, 0};
        if (last.kind == VerdictKind::CounterExample)
            entry.ce_states = static_cast<std::uint32_t>(last.trace->states.size());
        report.per_t.push_back(entry);
        if (last.kind == VerdictKind::CounterExample)
            break;
    }
    last.stats = aggregate;
    return {last, report};
}

} // namespace hotelck
