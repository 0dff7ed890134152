// SPDX-License-Identifier: Apache-2.0
//
// Canonicalization under S(room_universe) x S(guest_universe). Keys carry a
// total order and are never permuted. Canonical form is the minimum byte
// encoding over the whole group, found by exhaustive permutation search.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hotelck/model.hpp"

namespace hotelck {

HotelState canonicalize(const HotelState& s);

struct CanonicalForm {
    HotelState state;
    std::vector<int> room_perm;  // witnesses: state == apply_permutation(input, room_perm, guest_perm)
    std::vector<int> guest_perm;
};

CanonicalForm canonical_form(const HotelState& s);

std::uint64_t count_canonical_initial_states(const HotelConfig& c);

// Canonical encoding -> number of initial states in its orbit. Values sum to
// the total initial-state count.
std::map<std::string, std::uint64_t> canonical_orbit_sizes(const HotelConfig& c);

} // namespace hotelck
