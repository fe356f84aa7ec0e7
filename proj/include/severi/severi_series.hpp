#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "severi/e8.hpp"
#include "severi/qseries.hpp"
#include "severi/report.hpp"

namespace severi {

enum class BundleType { ordinary, weierstrass };

std::string to_string(BundleType t);
e8::BundleKind to_kind(BundleType t);

/// An internal consistency failure: a quantity that must be a nonnegative
/// integer (or a nonzero count) came out otherwise.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordinary: any g >= 0. Weierstrass: even g >= 0.
bool is_admissible(std::int64_t g, BundleType type);

// ---------------------------------------------------------------- series

/// -1/3 E2 E4^2 - 2/3 E4 E6.
QSeries nl_series_phi(std::size_t precision);

/// 1 - E4(q^2).
QSeries excess_correction(std::size_t precision);

/// 12 (theta - 1) E4(q^2).
QSeries nodal_correction(std::size_t precision);

/// phi + 1 - excess_correction - nodal_correction. The coefficient of
/// q^{n+2} is four times the summed degrees over height-n bisection bundles.
QSeries section_series(std::size_t precision);

/// Twice the conjectural degree sits at q^{g+2}:
///   ordinary:    D E4inf - E4inf E2(q^2)
///   Weierstrass: (D E4(q^4) - E4(q^4) E2(q^2) - 12 (theta(q^2) - 1)) / 2
QSeries degree_series(BundleType type, std::size_t precision);

/// Simple telltale counts at q^{g+2}: E4inf, or E4(q^4)/2 + 1/2.
QSeries simple_telltale_series(BundleType type, std::size_t precision);

// ---------------------------------------------------------------- per-genus values

/// Half the q^{g+2} coefficient of degree_series. Throws IntegrityError if
/// that coefficient is odd, negative or non-integral.
BigInt conjectural_degree(std::int64_t g, BundleType type);

BigInt simple_telltale_count(std::int64_t g, BundleType type);

/// 12 times the simple count at genus g - 2m; zero when g + 2 - 2m < 0 and
/// for Weierstrass genus 0.
BigInt nonsimple_telltale_count(std::int64_t g, std::int64_t m, BundleType type);

/// Conjectured local intersection multiplicity at a non-simple telltale with
/// fiber multiplicity m: 2 sigma_1(m), or for a doubled section
/// sigma_1(m) - [m is a square]. Doubled sections need m >= 2.
BigInt multiplicity(std::int64_t m, bool doubled_section);

/// Floor of (summed degree at the chosen height) / (number of bundles there).
BigInt rigorous_degree_bound(std::int64_t g, BundleType type);

/// (d-1)(d-2)/2 for d = rigorous_degree_bound(g, type).
BigInt genus_bound(std::int64_t g, BundleType type);

struct DegreeRow {
    std::int64_t g = 0;
    BundleType type = BundleType::ordinary;
    BigInt conjectural_degree;
    BigInt simple_telltales;
    std::map<std::int64_t, BigInt> nonsimple_telltales;  // m -> count, m = 1..(g+2)/2
    BigInt rigorous_degree_bound;
    BigInt genus_bound;
};

/// One row per admissible (g, type) with g <= g_max, ordered by g, ordinary first.
std::vector<DegreeRow> degree_table(std::int64_t g_max);

// ---------------------------------------------------------------- checks

CheckReport verify_ramanujan(std::size_t precision);
CheckReport verify_degree_consistency(BundleType type, std::size_t precision);
CheckReport verify_phi_decomposition(std::size_t precision);
CheckReport verify_e4inf_class_identity(std::size_t precision);
CheckReport height_degree_sum_check(std::int64_t n);
CheckReport verify_telltales_against_lattice(std::int64_t g_max, BundleType type);
CheckReport verify_bound_dominance(std::int64_t g_max);

/// Growth of the rigorous genus bound, read off from the section series:
///   S(h) <= A (h+2)^9 sigma_0(h+2),  count(g) >= B (g+2)^3,
/// hence genus_bound(g) <= C (g+2)^12 sigma_0(h+2)^2 with C = (A/B)^2 / 2.
/// sigma_0 stands in for the n^epsilon factor. Reported, never asserted.
struct GrowthReport {
    std::int64_t g_max = 0;
    Rational a;
    Rational b;
    Rational c;
    Rational max_ratio;  // max genus_bound / ((g+2)^12 sigma_0(h+2)^2)
    bool within = false;
};

GrowthReport genus_bound_growth(std::int64_t g_max);

}  // namespace severi
