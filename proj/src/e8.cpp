#include "severi/e8.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "severi/e8_kernels.hpp"
#include "severi/qseries.hpp"
#include "severi/rational.hpp"

namespace severi::e8 {

// ---------------------------------------------------------------- vectors

bool E8Vector::is_member(const Coords& d) {
    const int parity = d[0] & 1;
    std::int64_t sum = 0;
    for (auto x : d) {
        if ((x & 1) != parity) return false;
        sum += x;
    }
    return (sum & 3) == 0;
}

E8Vector E8Vector::from_doubled(const Coords& doubled) {
    if (!is_member(doubled)) {
        throw std::invalid_argument("not an E8 vector (doubled coordinates): " + E8Vector(doubled).to_string());
    }
    return E8Vector(doubled);
}

std::int64_t E8Vector::norm() const {
    std::int64_t s = 0;
    for (auto x : d_) s += std::int64_t{x} * x;
    return s / 4;
}

bool E8Vector::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](auto x) { return x == 0; });
}

E8Vector E8Vector::operator-() const {
    Coords c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = -d_[i];
    return E8Vector(c);
}

E8Vector operator+(const E8Vector& a, const E8Vector& b) {
    E8Vector::Coords c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = a.d_[i] + b.d_[i];
    return E8Vector(c);
}

E8Vector operator-(const E8Vector& a, const E8Vector& b) { return a + (-b); }

E8Vector operator*(std::int64_t k, const E8Vector& v) {
    E8Vector::Coords c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = static_cast<std::int32_t>(k * v.d_[i]);
    return E8Vector(c);
}

std::string E8Vector::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < 8; ++i) os << (i ? "," : "") << d_[i];
    os << ']';
    return os.str();
}

std::int64_t dot(const E8Vector& u, const E8Vector& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 8; ++i) s += std::int64_t{u[i]} * v[i];
    // E8 is integral, so the doubled pairing is always divisible by 4.
    return s / 4;
}

std::int64_t norm(const E8Vector& v) { return v.norm(); }

std::string to_string(ClassParity p) {
    switch (p) {
        case ClassParity::zero: return "zero";
        case ClassParity::root_type: return "root-type";
        case ClassParity::norm4_type: return "norm4-type";
    }
    return "?";
}

std::string to_string(BundleKind k) {
    switch (k) {
        case BundleKind::ordinary: return "ordinary";
        case BundleKind::weierstrass: return "weierstrass";
        case BundleKind::all: return "all";
    }
    return "?";
}

// ---------------------------------------------------------------- E8/2E8

const std::array<E8Vector, 8>& simple_roots() {
    static const std::array<E8Vector, 8> basis = {
        E8Vector::from_doubled({1, -1, -1, -1, -1, -1, -1, 1}),
        E8Vector::from_doubled({2, 2, 0, 0, 0, 0, 0, 0}),
        E8Vector::from_doubled({-2, 2, 0, 0, 0, 0, 0, 0}),
        E8Vector::from_doubled({0, -2, 2, 0, 0, 0, 0, 0}),
        E8Vector::from_doubled({0, 0, -2, 2, 0, 0, 0, 0}),
        E8Vector::from_doubled({0, 0, 0, -2, 2, 0, 0, 0}),
        E8Vector::from_doubled({0, 0, 0, 0, -2, 2, 0, 0}),
        E8Vector::from_doubled({0, 0, 0, 0, 0, -2, 2, 0}),
    };
    return basis;
}

namespace {

// Integer matrix K and denominator D with basis coordinates c = K d / D,
// where d are doubled coordinates. Computed once by exact elimination.
struct CoordinateMap {
    std::array<std::array<std::int64_t, 8>, 8> k{};
    std::int64_t den = 1;
};

CoordinateMap build_coordinate_map() {
    // Augmented [M | I] with M's columns the doubled simple roots.
    std::array<std::array<Rational, 16>, 8> a;
    const auto& basis = simple_roots();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) a[r][c] = Rational(std::int64_t{basis[c][r]});
        for (std::size_t c = 0; c < 8; ++c) a[r][8 + c] = Rational(r == c ? 1 : 0);
    }
    for (std::size_t col = 0; col < 8; ++col) {
        std::size_t pivot = col;
        while (pivot < 8 && a[pivot][col].is_zero()) ++pivot;
        if (pivot == 8) throw std::logic_error("simple roots are linearly dependent");
        std::swap(a[col], a[pivot]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < 8; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 16; ++c) a[r][c] -= f * a[col][c];
        }
    }
    BigInt den = 1;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 8; c < 16; ++c) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[r][c].denominator().get_mpz_t());
        }
    }
    CoordinateMap m;
    m.den = den.get_si();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            m.k[r][c] = (a[r][8 + c] * Rational(den)).to_integer().get_si();
        }
    }
    return m;
}

const CoordinateMap& coordinate_map() {
    static const CoordinateMap m = build_coordinate_map();
    return m;
}

}  // namespace

std::array<std::int64_t, 8> basis_coordinates(const E8Vector& v) {
    const auto& m = coordinate_map();
    std::array<std::int64_t, 8> c{};
    for (std::size_t r = 0; r < 8; ++r) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < 8; ++j) s += m.k[r][j] * v[j];
        if (s % m.den != 0) {
            throw std::logic_error("non-integral basis coordinate for " + v.to_string());
        }
        c[r] = s / m.den;
    }
    return c;
}

std::uint8_t class_bits(const E8Vector& v) {
    const auto c = basis_coordinates(v);
    std::uint8_t bits = 0;
    for (std::size_t j = 0; j < 8; ++j) bits |= static_cast<std::uint8_t>((c[j] & 1) << j);
    return bits;
}

ClassParity class_parity(std::uint8_t bits) {
    if (bits == 0) return ClassParity::zero;
    // Norm mod 4 is constant on cosets of 2E8, so any representative works.
    E8Vector rep;
    const auto& basis = simple_roots();
    for (std::size_t j = 0; j < 8; ++j) {
        if (bits & (1u << j)) rep = rep + basis[j];
    }
    return rep.norm() % 4 == 2 ? ClassParity::root_type : ClassParity::norm4_type;
}

ClassId class_id(const E8Vector& v) {
    const std::uint8_t bits = class_bits(v);
    return ClassId{bits, class_parity(bits)};
}

bool is_two_divisible(const E8Vector& v) { return class_bits(v) == 0; }

// ---------------------------------------------------------------- enumeration

std::vector<E8Vector> enumerate_norm(std::int64_t target) {
    if (target <= 0) throw std::invalid_argument("enumerate_norm needs a positive even norm");
    return kernels::parallel::enumerate_norm(target);
}

std::uint64_t count_norm(std::int64_t target) { return kernels::parallel::count_norm(target); }

void stream_norm(std::int64_t target, const std::function<void(const E8Vector&)>& sink) {
    if (target < 0 || target % 2 != 0) {
        throw std::invalid_argument("E8 is even: no vectors of norm " + std::to_string(target));
    }
    kernels::for_each_norm_serial(target, [&](const E8Vector::Coords& d) { sink(E8Vector::from_doubled(d)); });
}

const std::vector<E8Vector>& roots() {
    static const std::vector<E8Vector> r = enumerate_norm(2);
    return r;
}

// ---------------------------------------------------------------- root system

namespace {

using Shape = std::array<std::int32_t, 8>;

// Norm-4 vectors up to permutation and global sign, doubled, sorted descending.
constexpr std::array<Shape, 8> kNorm4Shapes = {{
    {4, 0, 0, 0, 0, 0, 0, 0},
    {2, 2, 2, 2, 0, 0, 0, 0},
    {2, 2, 2, 0, 0, 0, 0, -2},
    {2, 2, 0, 0, 0, 0, -2, -2},
    {3, 1, 1, 1, 1, 1, 1, -1},
    {3, 1, 1, 1, 1, -1, -1, -1},
    {3, 1, 1, -1, -1, -1, -1, -1},
    {3, -1, -1, -1, -1, -1, -1, -1},
}};

Shape sorted_desc(const E8Vector::Coords& d) {
    Shape s = d;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

int match_shape(const E8Vector& v) {
    const Shape plus = sorted_desc(v.doubled());
    const Shape minus = sorted_desc((-v).doubled());
    for (std::size_t i = 0; i < kNorm4Shapes.size(); ++i) {
        if (plus == kNorm4Shapes[i] || minus == kNorm4Shapes[i]) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

std::optional<std::pair<E8Vector, E8Vector>> root_pair_witness(const E8Vector& v) {
    for (const auto& r : roots()) {
        const E8Vector rest = v - r;
        if (rest.norm() == 2) return std::make_pair(r, rest);
    }
    return std::nullopt;
}

CheckReport norm4_shapes_check() {
    const auto vectors = enumerate_norm(4);
    CheckBuilder check("norm4_shapes", 4);
    std::array<std::int64_t, kNorm4Shapes.size()> per_shape{};
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const int shape = match_shape(vectors[i]);
        if (shape >= 0) ++per_shape[static_cast<std::size_t>(shape)];
        check.expect_equal(static_cast<std::int64_t>(i), 1, shape >= 0 ? 1 : 0);
        check.expect_equal(static_cast<std::int64_t>(i), 1, root_pair_witness(vectors[i]) ? 1 : 0);
    }
    std::ostringstream os;
    os << vectors.size() << " norm-4 vectors; per shape:";
    for (auto c : per_shape) os << ' ' << c;
    os << "; each is a sum of two roots";
    check.set_detail(os.str());
    return check.finish();
}

E8Vector reflect(const E8Vector& v, const E8Vector& root) {
    if (root.norm() != 2) {
        throw std::invalid_argument("reflection mirror " + root.to_string() + " is not a root");
    }
    return v - dot(v, root) * root;
}

std::vector<E8Vector> orbit(const E8Vector& seed, std::span<const E8Vector> generators) {
    for (const auto& g : generators) {
        if (g.norm() != 2) throw std::invalid_argument("orbit generator " + g.to_string() + " is not a root");
    }
    std::set<E8Vector> seen{seed};
    std::deque<E8Vector> frontier{seed};
    while (!frontier.empty()) {
        const E8Vector v = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            E8Vector w = reflect(v, g);
            if (seen.insert(w).second) frontier.push_back(std::move(w));
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- class counts

std::array<std::uint64_t, 256> class_histogram(std::int64_t target) {
    return kernels::parallel::class_histogram(target);
}

ClassCounts classify_classes() {
    const auto short2 = class_histogram(2);
    const auto short4 = class_histogram(4);
    ClassCounts counts;
    for (std::size_t bits = 0; bits < 256; ++bits) {
        if (bits == 0) {
            ++counts.zero;
            continue;
        }
        const bool has_root = short2[bits] > 0;
        const bool has_norm4 = short4[bits] > 0;
        if (has_root == has_norm4) {
            throw std::logic_error("class " + std::to_string(bits) +
                                   " does not have exactly one kind of short representative");
        }
        if (has_root) {
            ++counts.root_type;
        } else {
            ++counts.norm4_type;
        }
    }
    return counts;
}

std::uint64_t count_norm_in_class(std::int64_t target, ClassId cls) {
    if (target == 0) return cls.bits == 0 ? 1 : 0;
    return class_histogram(target)[cls.bits];
}

std::uint64_t count_pair_decompositions(const E8Vector& w, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("pair decompositions need m >= 1");
    if (((w.norm() - 2 * m) % 4 + 4) % 4 != 0) return 0;
    // Substituting x = 2 u1 - w turns {u1 + u2 = w, 4 u1.u2 = w^2 - 2m}
    // into {x^2 = 2m, x = w mod 2E8}. The swap u1 <-> u2 is x <-> -x, which
    // preserves the class, and has no fixed point because x = 0 would force
    // m = 0. So unordered pairs are exactly half of the class count.
    const std::uint64_t ordered = count_norm_in_class(2 * m, class_id(w));
    return ordered / 2;
}

std::optional<std::pair<E8Vector, E8Vector>> decomposition_witness(const E8Vector& u, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("decomposition_witness needs m >= 0");
    if (((u.norm() - 2 * m) % 4 + 4) % 4 != 0) {
        throw std::invalid_argument("no decomposition: u^2 and 2m differ mod 4");
    }
    const std::uint8_t target = class_bits(u);
    std::optional<E8Vector> best;
    std::int64_t best_norm = 0;
    auto consider = [&](const E8Vector& x) {
        if (class_bits(x) != target) return;
        // x = u mod 2E8, so u + x lies in 2E8 and halving is exact.
        E8Vector::Coords half;
        for (std::size_t i = 0; i < 8; ++i) half[i] = (u[i] + x[i]) / 2;
        const E8Vector v = E8Vector::from_doubled(half);
        const std::int64_t n = v.norm();
        if (!best || n < best_norm || (n == best_norm && v < *best)) {
            best = v;
            best_norm = n;
        }
    };
    if (m == 0) {
        consider(E8Vector{});
    } else {
        stream_norm(2 * m, consider);
    }
    if (!best) return std::nullopt;
    return std::make_pair(*best, u - *best);
}

// ---------------------------------------------------------------- bisection classes

namespace {

std::uint64_t theta_coefficient(std::int64_t k) {
    if (k == 0) return 1;
    return 240 * divisor_sum(3, static_cast<std::uint64_t>(k)).get_ui();
}

}  // namespace

std::uint64_t count_bisection_classes(std::int64_t g, std::int64_t n, BundleKind kind) {
    const std::int64_t k = 2 * n + 2 - g;
    if (k < 0) {
        throw std::invalid_argument("no bisection classes with genus " + std::to_string(g) + " and height " +
                                    std::to_string(n));
    }
    const std::uint64_t all = theta_coefficient(k);
    // 2u has norm 2k exactly when u^2 = k/2, which must itself be even.
    const std::uint64_t weierstrass = (k % 4 == 0) ? theta_coefficient(k / 4) : 0;
    switch (kind) {
        case BundleKind::all: return all;
        case BundleKind::weierstrass: return weierstrass;
        case BundleKind::ordinary: return all - weierstrass;
    }
    return 0;
}

MinHeight min_height_delta(std::int64_t g, BundleKind kind) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (kind == BundleKind::all) throw std::invalid_argument("min_height_delta needs ordinary or weierstrass");
    if (kind == BundleKind::weierstrass && g % 2 != 0) {
        throw std::invalid_argument("Weierstrass bundles have even genus");
    }
    const bool want_divisible = kind == BundleKind::weierstrass;
    const int rule = (want_divisible && g % 4 == 0) ? 1 : 0;

    for (int delta = 0; delta <= 1; ++delta) {
        const std::int64_t target = 2 * g + 4 - 4 * delta;
        // A 2-divisible vector 2u of norm N needs u^2 = N/4 even.
        if (want_divisible && target % 8 != 0) continue;
        std::optional<E8Vector> witness;
        kernels::for_each_norm_serial(target, [&](const E8Vector::Coords& d) {
            const E8Vector v = E8Vector::from_doubled(d);
            if (is_two_divisible(v) != want_divisible) return false;
            witness = v;
            return true;
        });
        if (!witness) continue;
        if (delta != rule) {
            throw std::logic_error("height defect " + std::to_string(delta) + " contradicts the rule for g = " +
                                   std::to_string(g));
        }
        return MinHeight{delta, *witness};
    }
    throw std::logic_error("no minimum-height witness for g = " + std::to_string(g));
}

}  // namespace severi::e8
