// SPDX-License-Identifier: Apache-2.0

#include "hotelck/model.hpp"

#include <bit>
#include <stdexcept>

namespace hotelck {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

void append_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v & 0xff));
}

std::uint16_t read_u16(std::string_view bytes, std::size_t& pos) {
    auto hi = static_cast<std::uint8_t>(bytes[pos++]);
    auto lo = static_cast<std::uint8_t>(bytes[pos++]);
    return static_cast<std::uint16_t>((hi << 8) | lo);
}

} // namespace

void HotelConfig::validate() const {
    if (key_count < 0 || key_count > kMaxUniverse)
        throw std::invalid_argument("key_count out of range");
    if (room_universe < 0 || room_universe > kMaxUniverse)
        throw std::invalid_argument("room_universe out of range");
    if (guest_universe < 0 || guest_universe > kMaxUniverse)
        throw std::invalid_argument("guest_universe out of range");
}

ActionLabel ActionLabel::entry(int g, int r, int k) {
    return {ActionKind::Entry, static_cast<std::int8_t>(g), static_cast<std::int8_t>(r),
            static_cast<std::int8_t>(k)};
}

ActionLabel ActionLabel::checkin(int g, int r, int k) {
    return {ActionKind::Checkin, static_cast<std::int8_t>(g), static_cast<std::int8_t>(r),
            static_cast<std::int8_t>(k)};
}

ActionLabel ActionLabel::checkout(int g) {
    return {ActionKind::Checkout, static_cast<std::int8_t>(g), -1, -1};
}

std::string to_string(const ActionLabel& label) {
    switch (label.kind) {
    case ActionKind::Entry:
        return "Entry(g" + std::to_string(label.guest) + ", r" + std::to_string(label.room) +
               ", k" + std::to_string(label.key) + ")";
    case ActionKind::Checkin:
        return "Checkin(g" + std::to_string(label.guest) + ", r" + std::to_string(label.room) +
               ", k" + std::to_string(label.key) + ")";
    case ActionKind::Checkout:
        return "Checkout(g" + std::to_string(label.guest) + ")";
    }
    return "?";
}

std::string encode_state(const HotelState& s) {
    std::string out;
    out.reserve(4 + 6 * s.keys.size() + 2 * s.gkeys.size());
    append_u16(out, static_cast<std::uint16_t>(s.rooms));
    append_u16(out, static_cast<std::uint16_t>(s.guests));
    for (std::size_t r = 0; r < s.keys.size(); ++r) {
        append_u16(out, s.keys[r]);
        out.push_back(static_cast<char>(s.current[r]));
        out.push_back(static_cast<char>(s.last[r]));
        append_u16(out, s.occupant[r]);
    }
    for (std::uint16_t m : s.gkeys)
        append_u16(out, m);
    return out;
}

HotelState decode_state(std::string_view bytes, const HotelConfig& c) {
    const std::size_t expected = 4 + 6 * static_cast<std::size_t>(c.room_universe) +
                                 2 * static_cast<std::size_t>(c.guest_universe);
    if (bytes.size() != expected)
        throw std::invalid_argument("encoded state has wrong size");
    HotelState s = empty_state(c);
    std::size_t pos = 0;
    s.rooms = read_u16(bytes, pos);
    s.guests = read_u16(bytes, pos);
    for (int r = 0; r < c.room_universe; ++r) {
        s.keys[r] = read_u16(bytes, pos);
        s.current[r] = static_cast<std::uint8_t>(bytes[pos++]);
        s.last[r] = static_cast<std::uint8_t>(bytes[pos++]);
        s.occupant[r] = read_u16(bytes, pos);
    }
    for (int g = 0; g < c.guest_universe; ++g)
        s.gkeys[g] = read_u16(bytes, pos);
    return s;
}

HotelState empty_state(const HotelConfig& c) {
    HotelState s;
    s.keys.assign(c.room_universe, 0);
    s.current.assign(c.room_universe, 0);
    s.last.assign(c.room_universe, 0);
    s.occupant.assign(c.room_universe, 0);
    s.gkeys.assign(c.guest_universe, 0);
    return s;
}

std::optional<int> next_key(int k, std::uint16_t pool) {
    const std::uint32_t above = static_cast<std::uint32_t>(pool) & ~((2u << k) - 1u);
    if (above == 0)
        return std::nullopt;
    return std::countr_zero(above);
}

bool type_inv(const HotelState& s, const HotelConfig& c) {
    if (s.room_universe() != c.room_universe || s.guest_universe() != c.guest_universe)
        return false;
    if (s.current.size() != s.keys.size() || s.last.size() != s.keys.size() ||
        s.occupant.size() != s.keys.size())
        return false;
    if (s.rooms >> c.room_universe || s.guests >> c.guest_universe)
        return false;
    const std::uint16_t krange = c.key_mask();
    for (int r = 0; r < c.room_universe; ++r) {
        if (!s.has_room(r)) {
            if (s.keys[r] || s.current[r] || s.last[r] || s.occupant[r])
                return false;
            continue;
        }
        if (s.keys[r] & ~krange)
            return false;
        if (s.current[r] >= c.key_count || s.last[r] >= c.key_count)
            return false;
        if (!((s.keys[r] >> s.current[r]) & 1u))
            return false; // current[r] must come from the room's pool
        if (s.occupant[r] & ~s.guests)
            return false;
        for (int r2 = r + 1; r2 < c.room_universe; ++r2)
            if (s.has_room(r2) && (s.keys[r] & s.keys[r2]))
                return false; // pools pairwise disjoint
    }
    for (int g = 0; g < c.guest_universe; ++g) {
        if (!s.has_guest(g)) {
            if (s.gkeys[g])
                return false;
            continue;
        }
        if (s.gkeys[g] & ~krange)
            return false;
    }
    return true;
}

bool is_initial_state(const HotelState& s, const HotelConfig& c) {
    if (!type_inv(s, c))
        return false;
    if (c.exact_scope) {
        if (s.rooms != ((1u << c.room_universe) - 1u) || s.guests != ((1u << c.guest_universe) - 1u))
            return false;
    }
    for (int r = 0; r < c.room_universe; ++r) {
        if (!s.has_room(r))
            continue;
        if (s.last[r] != s.current[r] || s.occupant[r] != 0)
            return false;
    }
    for (int g = 0; g < c.guest_universe; ++g)
        if (s.gkeys[g] != 0)
            return false;
    return true;
}

namespace {

// Assigns disjoint nonempty pools (with a current pick) to the present rooms
// in slot order, choosing pool masks and current keys in ascending order so
// the overall emission order is lexicographic on encode_state.
void assign_pools(HotelState& s, const std::vector<int>& present, std::size_t idx,
                  std::uint16_t available,
                  const std::function<void(const HotelState&)>& sink) {
    if (idx == present.size()) {
        sink(s);
        return;
    }
    const int r = present[idx];
    // A submask of `available` is numerically <= available.
    for (std::uint32_t pool = 1; pool <= available; ++pool) {
        if ((pool & available) != pool)
            continue;
        s.keys[r] = static_cast<std::uint16_t>(pool);
        for (std::uint32_t rest = pool; rest; rest &= rest - 1) {
            const int cur = std::countr_zero(rest);
            s.current[r] = static_cast<std::uint8_t>(cur);
            s.last[r] = static_cast<std::uint8_t>(cur);
            assign_pools(s, present, idx + 1,
                         static_cast<std::uint16_t>(available & ~pool), sink);
        }
    }
    s.keys[r] = 0;
    s.current[r] = 0;
    s.last[r] = 0;
}

} // namespace

void enumerate_initial_states(const HotelConfig& c,
                              const std::function<void(const HotelState&)>& sink) {
    c.validate();
    const std::uint32_t room_full = (1u << c.room_universe) - 1u;
    const std::uint32_t guest_full = (1u << c.guest_universe) - 1u;
    const std::uint32_t room_lo = c.exact_scope ? room_full : 0;
    const std::uint32_t guest_lo = c.exact_scope ? guest_full : 0;
    HotelState s = empty_state(c);
    for (std::uint32_t rm = room_lo; rm <= room_full; ++rm) {
        for (std::uint32_t gm = guest_lo; gm <= guest_full; ++gm) {
            s.rooms = rm;
            s.guests = gm;
            std::vector<int> present;
            for (int r = 0; r < c.room_universe; ++r)
                if ((rm >> r) & 1u)
                    present.push_back(r);
            assign_pools(s, present, 0, c.key_mask(), sink);
        }
    }
}

std::vector<HotelState> initial_states(const HotelConfig& c) {
    std::vector<HotelState> out;
    enumerate_initial_states(c, [&](const HotelState& s) { out.push_back(s); });
    return out;
}

std::vector<Step> enabled_steps(const HotelState& s, const HotelConfig& c) {
    std::vector<Step> out;
    // Entry block: guard k in gkeys[g] and (k = current[r] or k = nextKey).
    for (int g = 0; g < c.guest_universe; ++g) {
        if (!s.has_guest(g))
            continue;
        for (int r = 0; r < c.room_universe; ++r) {
            if (!s.has_room(r))
                continue;
            const auto nk = next_key(s.current[r], s.keys[r]);
            for (int k = 0; k < c.key_count; ++k) {
                if (!((s.gkeys[g] >> k) & 1u))
                    continue;
                if (k != s.current[r] && !(nk && *nk == k))
                    continue;
                HotelState t = s;
                t.current[r] = static_cast<std::uint8_t>(k);
                out.push_back({ActionLabel::entry(g, r, k), std::move(t)});
            }
        }
    }
    // Checkin block: room vacant, k is the next key after last[r].
    for (int g = 0; g < c.guest_universe; ++g) {
        if (!s.has_guest(g))
            continue;
        for (int r = 0; r < c.room_universe; ++r) {
            if (!s.has_room(r) || s.occupant[r] != 0)
                continue;
            const auto nk = next_key(s.last[r], s.keys[r]);
            if (!nk)
                continue;
            HotelState t = s;
            t.occupant[r] = static_cast<std::uint16_t>(1u << g);
            t.gkeys[g] |= static_cast<std::uint16_t>(1u << *nk);
            t.last[r] = static_cast<std::uint8_t>(*nk);
            out.push_back({ActionLabel::checkin(g, r, *nk), std::move(t)});
        }
    }
    // Checkout block: guest occupies some room; vacate all of them.
    for (int g = 0; g < c.guest_universe; ++g) {
        if (!s.has_guest(g))
            continue;
        bool occupies = false;
        for (int r = 0; r < c.room_universe; ++r)
            if ((s.occupant[r] >> g) & 1u)
                occupies = true;
        if (!occupies)
            continue;
        HotelState t = s;
        for (int r = 0; r < c.room_universe; ++r)
            t.occupant[r] &= static_cast<std::uint16_t>(~(1u << g));
        out.push_back({ActionLabel::checkout(g), std::move(t)});
    }
    return out;
}

bool post_pred(const HotelState& s, int g, int r, int k) {
    if (s.occupant[r] != (1u << g))
        return false;
    if (!((s.gkeys[g] >> k) & 1u))
        return false;
    return s.last[r] == k && s.current[r] != k;
}

bool no_bad_entry_step(const HotelState& s, const ActionLabel& label, const HotelState&) {
    if (label.kind != ActionKind::Entry)
        return true;
    const std::uint16_t occ = s.occupant[label.room];
    if (occ == 0)
        return true;
    return (occ >> label.guest) & 1u;
}

bool no_intervening_tla_ok(const HotelState& s, const ActionLabel& label, const HotelConfig& c) {
    for (int r = 0; r < c.room_universe; ++r) {
        if (!s.has_room(r) || popcount(s.occupant[r]) != 1)
            continue;
        const int g = std::countr_zero(static_cast<std::uint32_t>(s.occupant[r]));
        const int k = s.last[r];
        if (!post_pred(s, g, r, k))
            continue;
        if (label != ActionLabel::entry(g, r, k))
            return false;
    }
    return true;
}

HotelState apply_permutation(const HotelState& s, const std::vector<int>& room_perm,
                             const std::vector<int>& guest_perm) {
    HotelState t;
    t.keys.assign(s.keys.size(), 0);
    t.current.assign(s.current.size(), 0);
    t.last.assign(s.last.size(), 0);
    t.occupant.assign(s.occupant.size(), 0);
    t.gkeys.assign(s.gkeys.size(), 0);
    for (int r = 0; r < s.room_universe(); ++r) {
        if (!s.has_room(r))
            continue;
        const int nr = room_perm[r];
        t.rooms |= 1u << nr;
        t.keys[nr] = s.keys[r];
        t.current[nr] = s.current[r];
        t.last[nr] = s.last[r];
        std::uint16_t occ = 0;
        for (std::uint32_t rest = s.occupant[r]; rest; rest &= rest - 1)
            occ |= static_cast<std::uint16_t>(1u << guest_perm[std::countr_zero(rest)]);
        t.occupant[nr] = occ;
    }
    for (int g = 0; g < s.guest_universe(); ++g) {
        if (!s.has_guest(g))
            continue;
        const int ng = guest_perm[g];
        t.guests |= 1u << ng;
        t.gkeys[ng] = s.gkeys[g];
    }
    return t;
}

ActionLabel apply_permutation(const ActionLabel& label, const std::vector<int>& room_perm,
                              const std::vector<int>& guest_perm) {
    ActionLabel out = label;
    out.guest = static_cast<std::int8_t>(guest_perm[label.guest]);
    if (label.kind != ActionKind::Checkout)
        out.room = static_cast<std::int8_t>(room_perm[label.room]);
    return out;
}

} // namespace hotelck
