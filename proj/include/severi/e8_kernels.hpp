#pragma once

// Lattice-point enumeration kernels for E8 in doubled coordinates.
//
// Every kernel visits the vectors of a given norm in lexicographic order of
// the doubled coordinates. The serial versions are the reference; the
// parallel versions split the search on the first two coordinates and must
// reproduce the serial output exactly (same vectors, same order, same counts).

#include <array>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "severi/e8.hpp"

namespace severi::e8::kernels {

using Coords = E8Vector::Coords;

std::int64_t isqrt(std::int64_t n);

namespace detail {

// Calls visit(d) and reports whether the search should stop. Visitors may
// return void (never stop) or bool (true = stop).
template <typename Visit>
bool emit(Visit& visit, const Coords& d) {
    if constexpr (std::is_same_v<decltype(visit(d)), bool>) {
        return visit(d);
    } else {
        visit(d);
        return false;
    }
}

// Depth-first search below position `pos`. `budget` is the remaining value
// of sum(d_i^2) still to be placed; `sum` is the running sum of d_i.
// Returns true when the visitor asked to stop.
template <typename Visit>
bool descend(Coords& d, int pos, int parity, std::int64_t budget, std::int64_t sum, Visit& visit) {
    if (pos == 7) {
        const std::int64_t s = isqrt(budget);
        if (s * s != budget || (s & 1) != parity) return false;
        // -s before +s keeps lexicographic order.
        for (std::int64_t last : {-s, s}) {
            if (((sum + last) & 3) == 0) {
                d[7] = static_cast<std::int32_t>(last);
                if (emit(visit, d)) return true;
            }
            if (s == 0) break;
        }
        return false;
    }
    const std::int64_t after = 7 - pos;  // positions left after this one
    const std::int64_t room = budget - after * parity;
    if (room < 0) return false;
    const std::int64_t bound = isqrt(room);
    std::int64_t start = -bound;
    if ((start & 1) != parity) ++start;
    for (std::int64_t x = start; x <= bound; x += 2) {
        d[static_cast<std::size_t>(pos)] = static_cast<std::int32_t>(x);
        if (descend(d, pos + 1, parity, budget - x * x, sum + x, visit)) return true;
    }
    return false;
}

// Valid (d0, d1) prefixes for a given doubled budget, in lexicographic order.
std::vector<std::array<std::int32_t, 2>> prefixes(std::int64_t budget);

template <typename Visit>
void run_prefix(const std::array<std::int32_t, 2>& p, std::int64_t budget, Visit& visit) {
    Coords d{};
    d[0] = p[0];
    d[1] = p[1];
    const int parity = p[0] & 1;
    descend(d, 2, parity, budget - std::int64_t{p[0]} * p[0] - std::int64_t{p[1]} * p[1],
            std::int64_t{p[0]} + p[1], visit);
}

}  // namespace detail

/// Doubled budget sum(d_i^2) = 4 * norm.
inline std::int64_t doubled_budget(std::int64_t norm) { return 4 * norm; }

/// Visits every vector of the given norm in canonical order, single-threaded.
/// A visitor returning bool can stop the search early by returning true.
template <typename Visit>
void for_each_norm_serial(std::int64_t norm, Visit&& visit) {
    const std::int64_t budget = doubled_budget(norm);
    const std::int64_t bound = isqrt(budget);
    Coords d{};
    for (std::int64_t x = -bound; x <= bound; ++x) {
        const int parity = static_cast<int>(x & 1);
        if (x * x + 7 * parity > budget) continue;
        d[0] = static_cast<std::int32_t>(x);
        if (detail::descend(d, 1, parity, budget - x * x, x, visit)) return;
    }
}

namespace serial {

std::uint64_t count_norm(std::int64_t norm);
std::vector<E8Vector> enumerate_norm(std::int64_t norm);
std::array<std::uint64_t, 256> class_histogram(std::int64_t norm);

}  // namespace serial

namespace parallel {

std::uint64_t count_norm(std::int64_t norm);
std::vector<E8Vector> enumerate_norm(std::int64_t norm);
std::array<std::uint64_t, 256> class_histogram(std::int64_t norm);

}  // namespace parallel

}  // namespace severi::e8::kernels
