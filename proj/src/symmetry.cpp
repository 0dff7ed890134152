// SPDX-License-Identifier: Apache-2.0

#include "hotelck/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace hotelck {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

} // namespace

CanonicalForm canonical_form(const HotelState& s) {
    CanonicalForm best;
    best.state = s;
    best.room_perm = identity_perm(s.room_universe());
    best.guest_perm = identity_perm(s.guest_universe());
    std::string best_enc = encode_state(s);

    std::vector<int> rp = identity_perm(s.room_universe());
    do {
        std::vector<int> gp = identity_perm(s.guest_universe());
        do {
            HotelState candidate = apply_permutation(s, rp, gp);
            std::string enc = encode_state(candidate);
            if (enc < best_enc) {
                best_enc = std::move(enc);
                best.state = std::move(candidate);
                best.room_perm = rp;
                best.guest_perm = gp;
            }
        } while (std::next_permutation(gp.begin(), gp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return best;
}

HotelState canonicalize(const HotelState& s) {
    return canonical_form(s).state;
}

std::map<std::string, std::uint64_t> canonical_orbit_sizes(const HotelConfig& c) {
    std::map<std::string, std::uint64_t> orbits;
    enumerate_initial_states(c, [&](const HotelState& s) {
        ++orbits[encode_state(canonicalize(s))];
    });
    return orbits;
}

std::uint64_t count_canonical_initial_states(const HotelConfig& c) {
    return canonical_orbit_sizes(c).size();
}

} // namespace hotelck
