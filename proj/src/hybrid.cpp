// SPDX-License-Identifier: Apache-2.0

#include "hotelck/hybrid.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "hotelck/symmetry.hpp"

namespace hotelck {

std::vector<HotelState> derive_initial_generator(const HotelConfig& c, bool symmetry) {
    if (!symmetry)
        return initial_states(c);
    std::map<std::string, HotelState> reps;
    enumerate_initial_states(c, [&](const HotelState& s) {
        HotelState canon = canonicalize(s);
        std::string enc = encode_state(canon);
        reps.emplace(std::move(enc), std::move(canon));
    });
    std::vector<HotelState> out;
    out.reserve(reps.size());
    for (auto& [enc, s] : reps)
        out.push_back(std::move(s));
    return out;
}

std::pair<Verdict, HybridReport> hybrid_check(const HotelConfig& c,
                                              const StepProperty& property,
                                              const std::string& property_name,
                                              const CheckSemantics& sem,
                                              const HybridOptions& opts) {
    if (opts.workers < 1)
        throw std::invalid_argument("workers must be >= 1");
    const std::vector<HotelState> inits = derive_initial_generator(c, opts.symmetry);

    struct TaskOutcome {
        Verdict verdict;
        bool done = false;
        bool resource_error = false;
        std::uint64_t partial_states = 0;
    };
    std::vector<TaskOutcome> outcomes(inits.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= inits.size())
                return;
            if (opts.short_circuit && stop.load())
                return;
            HotelSystemOptions sys_opts;
            sys_opts.tla_no_intervening = opts.tla_no_intervening;
            sys_opts.fixed_initial = inits[i];
            const TransitionSystem ts = make_hotel_system(c, sys_opts);
            outcomes[i].done = true;
            try {
                outcomes[i].verdict = sem.search == SearchOrder::Bfs
                                          ? bfs_check(ts, property, property_name, sem)
                                          : dfs_check(ts, property, property_name, sem);
                if (outcomes[i].verdict.kind == VerdictKind::CounterExample)
                    stop.store(true);
            } catch (const ResourceLimitError& err) {
                outcomes[i].resource_error = true;
                outcomes[i].partial_states = err.states_explored;
            }
        }
    };

    if (opts.workers == 1 || inits.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned n = std::min<std::size_t>(opts.workers, inits.size());
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Deterministic merge: task order follows ascending initial-state
    // encoding, so the first violating task wins regardless of scheduling.
    HybridReport report;
    report.tasks.reserve(inits.size());
    CheckStats aggregate;
    const Verdict* first_violation = nullptr;
    bool any_exhausted = false;
    for (std::size_t i = 0; i < inits.size(); ++i) {
        const TaskOutcome& out = outcomes[i];
        TaskReport task;
        task.initial_encoding = encode_state(inits[i]);
        task.resource_error = out.resource_error;
        if (!out.done) {
            task.skipped = true;
            task.kind = VerdictKind::DepthExhausted; // not run
        } else if (out.resource_error) {
            task.states_explored = out.partial_states;
            task.kind = VerdictKind::DepthExhausted; // inconclusive
            ++report.resource_errors;
            any_exhausted = true;
        } else {
            task.kind = out.verdict.kind;
            task.states_explored = out.verdict.stats.states_explored;
            aggregate.states_explored += out.verdict.stats.states_explored;
            aggregate.diameter = std::max(aggregate.diameter, out.verdict.stats.diameter);
            aggregate.deadlocks += out.verdict.stats.deadlocks;
            if (out.verdict.kind == VerdictKind::CounterExample ||
                out.verdict.kind == VerdictKind::Deadlock) {
                ++report.violating_tasks;
                if (!first_violation)
                    first_violation = &out.verdict;
            } else if (out.verdict.kind == VerdictKind::DepthExhausted) {
                any_exhausted = true;
            }
        }
        report.tasks.push_back(std::move(task));
    }

    if (first_violation) {
        Verdict v = *first_violation;
        v.stats = aggregate;
        return {std::move(v), std::move(report)};
    }
    if (any_exhausted)
        return {Verdict::depth_exhausted(sem.max_depth, aggregate), std::move(report)};
    if (inits.empty())
        return {Verdict::verified({}), std::move(report)};
    return {Verdict::verified(aggregate), std::move(report)};
}

} // namespace hotelck
