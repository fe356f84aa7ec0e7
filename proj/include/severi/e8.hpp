#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "severi/report.hpp"

namespace severi::e8 {

/// A vector of the positive-definite E8 lattice stored in doubled
/// coordinates d_i = 2 v_i, so half-integer vectors are exact.
///
/// Construction enforces membership: all d_i share one parity and
/// sum(d_i) is divisible by 4. Ordering is lexicographic on the doubled
/// coordinates, which is the canonical order used for every enumeration.
class E8Vector {
public:
    using Coords = std::array<std::int32_t, 8>;

    E8Vector() = default;

    /// Throws std::invalid_argument if the coordinates are not in E8.
    static E8Vector from_doubled(const Coords& doubled);
    static bool is_member(const Coords& doubled);

    const Coords& doubled() const { return d_; }
    std::int32_t operator[](std::size_t i) const { return d_[i]; }

    /// Sum of v_i^2; always an even nonnegative integer.
    std::int64_t norm() const;

    bool is_zero() const;
    bool is_integral() const { return (d_[0] & 1) == 0; }

    E8Vector operator-() const;
    friend E8Vector operator+(const E8Vector& a, const E8Vector& b);
    friend E8Vector operator-(const E8Vector& a, const E8Vector& b);
    friend E8Vector operator*(std::int64_t k, const E8Vector& v);

    friend auto operator<=>(const E8Vector&, const E8Vector&) = default;
    friend bool operator==(const E8Vector&, const E8Vector&) = default;

    std::string to_string() const;

private:
    explicit E8Vector(const Coords& d) : d_(d) {}

    Coords d_{};
};

/// Euclidean pairing; an integer for any two E8 vectors.
std::int64_t dot(const E8Vector& u, const E8Vector& v);
std::int64_t norm(const E8Vector& v);

enum class ClassParity { zero, root_type, norm4_type };

std::string to_string(ClassParity p);

/// A coset of 2E8 in E8, packed as the mod-2 coordinates in the fixed
/// simple-root basis (bit j = coefficient of simple root j, mod 2).
struct ClassId {
    std::uint8_t bits = 0;
    ClassParity parity = ClassParity::zero;

    friend bool operator==(const ClassId& a, const ClassId& b) { return a.bits == b.bits; }
};

/// The simple roots used to coordinatize E8/2E8.
const std::array<E8Vector, 8>& simple_roots();

/// Integer coordinates of v in the simple-root basis.
std::array<std::int64_t, 8> basis_coordinates(const E8Vector& v);

std::uint8_t class_bits(const E8Vector& v);
ClassId class_id(const E8Vector& v);

/// Parity type of a coset given only its bits.
ClassParity class_parity(std::uint8_t bits);

/// True when v lies in 2E8.
bool is_two_divisible(const E8Vector& v);

/// Vectors of norm `target` in canonical order. Rejects odd or negative targets.
std::vector<E8Vector> enumerate_norm(std::int64_t target);

/// Number of vectors of norm `target`, without materializing them.
std::uint64_t count_norm(std::int64_t target);

/// Calls `sink` for each vector of norm `target`, in canonical order.
void stream_norm(std::int64_t target, const std::function<void(const E8Vector&)>& sink);

/// The 240 vectors of norm 2.
const std::vector<E8Vector>& roots();

/// Checks that every norm-4 vector is +/- a permutation of one of the eight
/// listed shapes and is a sum of two roots.
CheckReport norm4_shapes_check();

/// Witness pair of roots (r1, r2) with r1 + r2 = v, for a norm-4 vector v.
std::optional<std::pair<E8Vector, E8Vector>> root_pair_witness(const E8Vector& v);

/// v - <v,r> r. Rejects mirrors that are not roots.
E8Vector reflect(const E8Vector& v, const E8Vector& root);

/// Closure of {seed} under the reflections in `generators`, sorted canonically.
std::vector<E8Vector> orbit(const E8Vector& seed, std::span<const E8Vector> generators);

struct ClassCounts {
    int zero = 0;
    int root_type = 0;
    int norm4_type = 0;
    int total() const { return zero + root_type + norm4_type; }
};

/// Partitions E8/2E8 by the parity of its short representatives.
ClassCounts classify_classes();

/// Number of vectors of each class at norm `target` (index = class bits).
std::array<std::uint64_t, 256> class_histogram(std::int64_t target);

std::uint64_t count_norm_in_class(std::int64_t target, ClassId cls);

/// Unordered pairs {u1, u2} with u1 + u2 = w and 4 u1.u2 = w^2 - 2m
/// (positive-definite convention).
std::uint64_t count_pair_decompositions(const E8Vector& w, std::int64_t m);

/// A pair (v, w) with v + w = u and 4 v.w = u^2 - 2m, or nullopt when none
/// exists. Throws std::invalid_argument when u^2 and 2m differ mod 4.
std::optional<std::pair<E8Vector, E8Vector>> decomposition_witness(const E8Vector& u, std::int64_t m);

enum class BundleKind { ordinary, weierstrass, all };

std::string to_string(BundleKind k);

/// Number of bisection classes of genus g and height n, i.e. lattice vectors
/// of norm 2(2n + 2 - g) split by 2-divisibility. Closed form via sigma_3.
std::uint64_t count_bisection_classes(std::int64_t g, std::int64_t n, BundleKind kind);

struct MinHeight {
    int delta = 0;
    E8Vector witness;
};

/// Height defect for genus g, with a lattice witness of norm 2g + 4 - 4 delta
/// in the class required by the bundle kind.
MinHeight min_height_delta(std::int64_t g, BundleKind kind);

}  // namespace severi::e8
