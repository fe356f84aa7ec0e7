#include "severi/checks.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "severi/e8.hpp"
#include "severi/qseries.hpp"
#include "severi/severi_series.hpp"

namespace severi::checks {

namespace {

Rational count(std::uint64_t n) { return Rational(BigInt(static_cast<unsigned long>(n))); }

void require_cap(std::int64_t norm_cap) {
    if (norm_cap < 2 || norm_cap % 2 != 0) throw std::invalid_argument("norm cap must be an even integer >= 2");
}

}  // namespace

CheckReport theta_e4(std::int64_t norm_cap) {
    require_cap(norm_cap);
    CheckBuilder check("theta_e4", norm_cap);
    for (std::int64_t norm = 2; norm <= norm_cap; norm += 2) {
        const BigInt expected = 240 * divisor_sum(3, static_cast<std::uint64_t>(norm / 2));
        check.expect_equal(norm, Rational(expected), count(e8::count_norm(norm)));
    }
    check.set_detail("#{v : v^2 = 2n} = 240 sigma_3(n) for 2n <= " + std::to_string(norm_cap));
    return check.finish();
}

CheckReport class_uniformity(std::int64_t norm_cap) {
    require_cap(norm_cap);
    CheckBuilder check("class_uniformity", norm_cap);

    const e8::ClassCounts split = e8::classify_classes();
    check.expect_equal(0, Rational(1), Rational(split.zero));
    check.expect_equal(0, Rational(120), Rational(split.root_type));
    check.expect_equal(0, Rational(135), Rational(split.norm4_type));

    std::ostringstream detail;
    detail << "classes " << split.zero << "/" << split.root_type << "/" << split.norm4_type;
    for (std::int64_t norm = 2; norm <= norm_cap; norm += 2) {
        const auto hist = e8::class_histogram(norm);
        std::array<std::optional<std::uint64_t>, 3> per_type;
        for (std::size_t bits = 0; bits < hist.size(); ++bits) {
            const auto slot = static_cast<std::size_t>(e8::class_parity(static_cast<std::uint8_t>(bits)));
            if (!per_type[slot]) {
                per_type[slot] = hist[bits];
            } else {
                check.expect_equal(norm, count(*per_type[slot]), count(hist[bits]));
            }
        }
        if (norm <= 4) {
            detail << "; norm " << norm << ": " << *per_type[1] << " per root-type class, " << *per_type[2]
                   << " per norm4-type class";
        }
    }
    check.set_detail(detail.str());
    return check.finish();
}

CheckReport transitivity() {
    CheckBuilder check("transitivity", 4);
    const auto& roots = e8::roots();
    check.expect_equal(2, Rational(240), count(roots.size()));

    const auto root_orbit = e8::orbit(roots.front(), roots);
    check.expect_equal(2, Rational(240), count(root_orbit.size()));
    check.expect_equal(2, Rational(1), Rational(root_orbit == roots ? 1 : 0));

    const auto norm4 = e8::enumerate_norm(4);
    check.expect_equal(4, Rational(2160), count(norm4.size()));
    const auto seed = e8::E8Vector::from_doubled({4, 0, 0, 0, 0, 0, 0, 0});
    const auto norm4_orbit = e8::orbit(seed, roots);
    check.expect_equal(4, Rational(2160), count(norm4_orbit.size()));
    check.expect_equal(4, Rational(1), Rational(norm4_orbit == norm4 ? 1 : 0));

    const CheckReport shapes = e8::norm4_shapes_check();
    if (!shapes.passed()) {
        const auto& d = *shapes.first_discrepancy();
        check.expect_equal(d.exponent, d.expected, d.got);
    }
    check.set_detail("orbits of sizes " + std::to_string(root_orbit.size()) + " and " +
                     std::to_string(norm4_orbit.size()) + "; " + shapes.detail());
    return check.finish();
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> list = {
        "ramanujan",       "theta_e4",          "class_uniformity",   "transitivity",         "e4inf_identity",
        "phi_decomposition", "degree_consistency", "telltales_vs_lattice", "height_sums", "bound_dominance",
    };
    return list;
}

bool is_known(const std::string& name) {
    const auto& list = names();
    return std::find(list.begin(), list.end(), name) != list.end();
}

std::vector<CheckReport> run(const std::string& name, const Limits& limits) {
    if (limits.precision < 8) throw std::invalid_argument("verification needs precision >= 8");
    require_cap(limits.norm_cap);
    const auto p = static_cast<std::size_t>(limits.precision);
    const std::int64_t cap = limits.norm_cap;

    if (name == "ramanujan") return {verify_ramanujan(p)};
    if (name == "theta_e4") return {theta_e4(cap)};
    if (name == "class_uniformity") return {class_uniformity(cap)};
    if (name == "transitivity") return {transitivity()};
    if (name == "e4inf_identity") return {verify_e4inf_class_identity(p)};
    if (name == "phi_decomposition") return {verify_phi_decomposition(p)};
    if (name == "degree_consistency") {
        return {verify_degree_consistency(BundleType::ordinary, p),
                verify_degree_consistency(BundleType::weierstrass, p)};
    }
    if (name == "telltales_vs_lattice") {
        // Pair counts at genus g need vectors of norm 2(g + 2).
        const std::int64_t g_max = std::min<std::int64_t>(10, cap / 2 - 2);
        if (g_max < 0) throw std::invalid_argument("telltales_vs_lattice needs norm cap >= 4");
        return {verify_telltales_against_lattice(g_max, BundleType::ordinary),
                verify_telltales_against_lattice(g_max, BundleType::weierstrass)};
    }
    if (name == "height_sums") {
        std::vector<CheckReport> out;
        for (std::int64_t n = 0; n <= 6 && n + 2 <= limits.precision; ++n) out.push_back(height_degree_sum_check(n));
        return out;
    }
    if (name == "bound_dominance") return {verify_bound_dominance(std::min<std::int64_t>(40, limits.precision - 2))};
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_all(const Limits& limits) {
    std::vector<CheckReport> out;
    for (const auto& name : names()) {
        auto reports = run(name, limits);
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
}

}  // namespace severi::checks
