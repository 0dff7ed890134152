// SPDX-License-Identifier: Apache-2.0
//
// Serialization of states, traces and verdicts: per-instant text blocks
// (trace text format v1) and JSON with a stable, round-trippable layout.

#pragma once

#include <string>

#include <json.hpp>

#include "hotelck/hybrid.hpp"
#include "hotelck/verdict.hpp"

namespace hotelck {

std::string render_state_text(const HotelState& s);
std::string render_trace_text(const Trace& trace);

nlohmann::json state_to_json(const HotelState& s);
HotelState state_from_json(const nlohmann::json& j, const HotelConfig& c);

nlohmann::json label_to_json(const ActionLabel& label);
ActionLabel label_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const Trace& trace);
Trace trace_from_json(const nlohmann::json& j, const HotelConfig& c);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json hybrid_report_to_json(const HybridReport& report);

} // namespace hotelck
