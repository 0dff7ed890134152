// SPDX-License-Identifier: Apache-2.0

#include "hotelck/render.hpp"

#include <sstream>

namespace hotelck {

namespace {

std::string mask_to_set(std::uint32_t mask, char prefix) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!((mask >> i) & 1u))
            continue;
        if (!first)
            out += ", ";
        out += prefix;
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

std::vector<int> mask_to_list(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u)
            out.push_back(i);
    return out;
}

std::uint32_t list_to_mask(const nlohmann::json& j) {
    std::uint32_t mask = 0;
    for (const auto& v : j)
        mask |= 1u << v.get<int>();
    return mask;
}

} // namespace

std::string render_state_text(const HotelState& s) {
    std::ostringstream out;
    out << "Room = " << mask_to_set(s.rooms, 'r') << "   Guest = " << mask_to_set(s.guests, 'g')
        << "\n";
    out << "keys:     ";
    for (int r = 0; r < s.room_universe(); ++r)
        if (s.has_room(r))
            out << "r" << r << " = " << mask_to_set(s.keys[r], 'k') << "  ";
    out << "\ncurrent:  ";
    for (int r = 0; r < s.room_universe(); ++r)
        if (s.has_room(r))
            out << "r" << r << " = k" << static_cast<int>(s.current[r]) << "  ";
    out << "\nlast:     ";
    for (int r = 0; r < s.room_universe(); ++r)
        if (s.has_room(r))
            out << "r" << r << " = k" << static_cast<int>(s.last[r]) << "  ";
    out << "\noccupant: ";
    for (int r = 0; r < s.room_universe(); ++r)
        if (s.has_room(r))
            out << "r" << r << " = " << mask_to_set(s.occupant[r], 'g') << "  ";
    out << "\ngkeys:    ";
    for (int g = 0; g < s.guest_universe(); ++g)
        if (s.has_guest(g))
            out << "g" << g << " = " << mask_to_set(s.gkeys[g], 'k') << "  ";
    out << "\n";
    return out.str();
}

std::string render_trace_text(const Trace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        out << "--- instant " << i << " ---\n";
        out << render_state_text(trace.states[i]);
        if (i < trace.labels.size())
            out << "\n  " << to_string(trace.labels[i]) << "\n\n";
    }
    return out.str();
}

nlohmann::json state_to_json(const HotelState& s) {
    nlohmann::json j;
    j["rooms"] = mask_to_list(s.rooms);
    j["guests"] = mask_to_list(s.guests);
    nlohmann::json keys = nlohmann::json::object();
    nlohmann::json current = nlohmann::json::object();
    nlohmann::json last = nlohmann::json::object();
    nlohmann::json occupant = nlohmann::json::object();
    for (int r = 0; r < s.room_universe(); ++r) {
        if (!s.has_room(r))
            continue;
        const std::string id = std::to_string(r);
        keys[id] = mask_to_list(s.keys[r]);
        current[id] = s.current[r];
        last[id] = s.last[r];
        occupant[id] = mask_to_list(s.occupant[r]);
    }
    nlohmann::json gkeys = nlohmann::json::object();
    for (int g = 0; g < s.guest_universe(); ++g)
        if (s.has_guest(g))
            gkeys[std::to_string(g)] = mask_to_list(s.gkeys[g]);
    j["keys"] = std::move(keys);
    j["current"] = std::move(current);
    j["last"] = std::move(last);
    j["occupant"] = std::move(occupant);
    j["gkeys"] = std::move(gkeys);
    return j;
}

HotelState state_from_json(const nlohmann::json& j, const HotelConfig& c) {
    HotelState s = empty_state(c);
    s.rooms = list_to_mask(j.at("rooms"));
    s.guests = list_to_mask(j.at("guests"));
    for (const auto& [id, pool] : j.at("keys").items())
        s.keys[std::stoi(id)] = static_cast<std::uint16_t>(list_to_mask(pool));
    for (const auto& [id, k] : j.at("current").items())
        s.current[std::stoi(id)] = k.get<std::uint8_t>();
    for (const auto& [id, k] : j.at("last").items())
        s.last[std::stoi(id)] = k.get<std::uint8_t>();
    for (const auto& [id, occ] : j.at("occupant").items())
        s.occupant[std::stoi(id)] = static_cast<std::uint16_t>(list_to_mask(occ));
    for (const auto& [id, held] : j.at("gkeys").items())
        s.gkeys[std::stoi(id)] = static_cast<std::uint16_t>(list_to_mask(held));
    return s;
}

nlohmann::json label_to_json(const ActionLabel& label) {
    nlohmann::json j;
    switch (label.kind) {
    case ActionKind::Entry: j["kind"] = "entry"; break;
    case ActionKind::Checkin: j["kind"] = "checkin"; break;
    case ActionKind::Checkout: j["kind"] = "checkout"; break;
    }
    j["guest"] = label.guest;
    if (label.kind != ActionKind::Checkout) {
        j["room"] = label.room;
        j["key"] = label.key;
    }
    return j;
}

ActionLabel label_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int g = j.at("guest").get<int>();
    if (kind == "checkout")
        return ActionLabel::checkout(g);
    const int r = j.at("room").get<int>();
    const int k = j.at("key").get<int>();
    if (kind == "entry")
        return ActionLabel::entry(g, r, k);
    if (kind == "checkin")
        return ActionLabel::checkin(g, r, k);
    throw std::invalid_argument("unknown action kind: " + kind);
}

nlohmann::json trace_to_json(const Trace& trace) {
    nlohmann::json j;
    j["states"] = nlohmann::json::array();
    for (const auto& s : trace.states)
        j["states"].push_back(state_to_json(s));
    j["labels"] = nlohmann::json::array();
    for (const auto& l : trace.labels)
        j["labels"].push_back(label_to_json(l));
    return j;
}

Trace trace_from_json(const nlohmann::json& j, const HotelConfig& c) {
    Trace trace;
    for (const auto& s : j.at("states"))
        trace.states.push_back(state_from_json(s, c));
    for (const auto& l : j.at("labels"))
        trace.labels.push_back(label_from_json(l));
    return trace;
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["verdict"] = verdict_kind_name(v.kind);
    j["stats"] = {{"states", v.stats.states_explored},
                  {"diameter", v.stats.diameter},
                  {"deadlocks", v.stats.deadlocks}};
    if (v.trace)
        j["trace"] = trace_to_json(*v.trace);
    if (v.kind == VerdictKind::CounterExample)
        j["violated_property"] = v.violated_property;
    if (v.kind == VerdictKind::DepthExhausted)
        j["max_depth"] = v.max_depth;
    return j;
}

nlohmann::json hybrid_report_to_json(const HybridReport& report) {
    nlohmann::json tasks = nlohmann::json::array();
    for (const auto& t : report.tasks) {
        nlohmann::json jt;
        jt["kind"] = verdict_kind_name(t.kind);
        jt["states"] = t.states_explored;
        if (t.resource_error)
            jt["resource_error"] = true;
        if (t.skipped)
            jt["skipped"] = true;
        tasks.push_back(std::move(jt));
    }
    nlohmann::json j;
    j["tasks"] = std::move(tasks);
    j["violating_tasks"] = report.violating_tasks;
    j["task_count"] = report.tasks.size();
    if (report.resource_errors)
        j["resource_errors"] = report.resource_errors;
    return j;
}

} // namespace hotelck
