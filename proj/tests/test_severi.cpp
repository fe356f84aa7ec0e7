#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "severi/e8.hpp"
#include "severi/qseries.hpp"
#include "severi/severi_series.hpp"

using namespace severi;

namespace {

constexpr auto ord = BundleType::ordinary;
constexpr auto wei = BundleType::weierstrass;

std::int64_t sigma(unsigned k, std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::int64_t p = 1;
        for (unsigned i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}

// Independent oracle for phi: plain vectors and schoolbook products.
std::vector<Rational> phi_oracle(std::size_t n) {
    std::vector<Rational> e2(n + 1), e4(n + 1), e6(n + 1);
    e2[0] = e4[0] = e6[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto m = static_cast<std::int64_t>(k);
        e2[k] = -24 * sigma(1, m);
        e4[k] = 240 * sigma(3, m);
        e6[k] = -504 * sigma(5, m);
    }
    auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
        return c;
    };
    const auto a = mul(e2, mul(e4, e4));
    const auto b = mul(e4, e6);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = Rational(-1, 3) * a[k] + Rational(-2, 3) * b[k];
    return out;
}

BigInt big(long v) { return BigInt(v); }

}  // namespace

// ---------------------------------------------------------------- series

TEST(Phi, GoldenCoefficients) {
    const QSeries phi = nl_series_phi(3);
    EXPECT_EQ(phi.coeff(0), Rational(-1));
    EXPECT_EQ(phi.coeff(1), Rational(24));
    EXPECT_EQ(phi.coeff(2), Rational(73512));
    EXPECT_EQ(phi.coeff(3), Rational(3621216));
}

TEST(Phi, MatchesOracle) {
    const QSeries phi = nl_series_phi(40);
    const auto oracle = phi_oracle(40);
    for (std::size_t k = 0; k <= 40; ++k) {
        EXPECT_EQ(phi.coeff(k), oracle[k]) << k;
        EXPECT_TRUE(phi.coeff(k).is_integer()) << k;
    }
}

TEST(Corrections, Examples) {
    const QSeries ex = excess_correction(4);
    EXPECT_EQ(ex.coeff(2), Rational(-240));
    EXPECT_EQ(ex.coeff(1), Rational(0));
    EXPECT_EQ(ex.coeff(0), Rational(0));
    const QSeries no = nodal_correction(4);
    EXPECT_EQ(no.coeff(1), Rational(24));
    EXPECT_EQ(no.coeff(3), Rational(5760));
    EXPECT_EQ(no.coeff(2), Rational(0));
}

TEST(SectionSeries, Examples) {
    const QSeries sec = section_series(3);
    EXPECT_EQ(sec.coeff(0), Rational(0));
    EXPECT_EQ(sec.coeff(1), Rational(0));
    EXPECT_EQ(sec.coeff(2), Rational(73752));
    EXPECT_EQ(sec.coeff(3), Rational(3615456));
}

TEST(SectionSeries, NonnegativeAndDivisibleByFour) {
    const QSeries sec = section_series(200);
    for (std::size_t k = 0; k <= 200; ++k) {
        const Rational c = sec.coeff(k);
        ASSERT_TRUE(c.is_integer()) << k;
        ASSERT_GE(c.sign(), 0) << k;
        ASSERT_EQ(c.to_integer() % 4, 0) << k;
    }
}

TEST(SectionSeries, Reassembles) {
    const std::size_t n = 100;
    EXPECT_EQ(section_series(n) - Rational(1) + excess_correction(n) + nodal_correction(n), nl_series_phi(n));
}

TEST(DegreeSeries, Examples) {
    EXPECT_EQ(degree_series(ord, 3).coeff(2), Rational(8));
    EXPECT_EQ(degree_series(ord, 3).coeff(3), Rational(80));
    EXPECT_EQ(degree_series(wei, 4).coeff(4), Rational(396));
    EXPECT_EQ(degree_series(wei, 4).coeff(2), Rational(0));
}

TEST(DegreeSeries, AdmissibleCoefficientsAreEvenAndNonnegative) {
    const std::size_t n = 120;
    const QSeries o = degree_series(ord, n), w = degree_series(wei, n);
    for (std::int64_t g = 0; g + 2 <= static_cast<std::int64_t>(n); ++g) {
        const Rational co = o.coeff(static_cast<std::size_t>(g + 2));
        ASSERT_TRUE(co.is_integer() && co.sign() >= 0 && co.to_integer() % 2 == 0) << g;
        if (g % 2 == 0) {
            const Rational cw = w.coeff(static_cast<std::size_t>(g + 2));
            ASSERT_TRUE(cw.is_integer() && cw.sign() >= 0 && cw.to_integer() % 2 == 0) << g;
        }
    }
}

// ---------------------------------------------------------------- per-genus values

TEST(Degrees, Examples) {
    EXPECT_EQ(conjectural_degree(0, ord), 4);
    EXPECT_EQ(conjectural_degree(1, ord), 40);
    EXPECT_EQ(conjectural_degree(2, wei), 198);
    EXPECT_EQ(conjectural_degree(0, wei), 0);
    EXPECT_THROW(conjectural_degree(1, wei), std::invalid_argument);
    EXPECT_THROW(conjectural_degree(-1, ord), std::invalid_argument);
}

TEST(Degrees, SingularFiberAccounting) {
    // Genus 0: 8 simple telltales, each of weight g + 1 = 1, make up 2 * degree.
    EXPECT_EQ(simple_telltale_count(0, ord), 8);
    EXPECT_EQ(BigInt(2 * conjectural_degree(0, ord)), BigInt((0 + 1) * simple_telltale_count(0, ord)));
}

TEST(Telltales, Examples) {
    EXPECT_EQ(simple_telltale_count(0, ord), 8);
    EXPECT_EQ(simple_telltale_count(1, ord), 28);
    EXPECT_EQ(simple_telltale_count(2, ord), 64);
    EXPECT_EQ(simple_telltale_count(2, wei), 120);
    EXPECT_EQ(simple_telltale_count(0, wei), 0);
    EXPECT_EQ(nonsimple_telltale_count(3, 1, ord), 336);
    EXPECT_EQ(nonsimple_telltale_count(3, 2, ord), 12);
    EXPECT_EQ(nonsimple_telltale_count(3, 3, ord), 0);
    EXPECT_EQ(nonsimple_telltale_count(0, 1, wei), 0);
    EXPECT_THROW(nonsimple_telltale_count(3, 0, ord), std::invalid_argument);
}

TEST(Telltales, NonsimpleMatchesLatticeOracle) {
    const e8::E8Vector root = e8::E8Vector::from_doubled({2, 2, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(nonsimple_telltale_count(3, 1, ord), BigInt(12 * e8::count_pair_decompositions(root, 3)));
}

TEST(Multiplicity, Examples) {
    EXPECT_EQ(multiplicity(1, false), 2);
    EXPECT_EQ(multiplicity(4, true), 6);
    EXPECT_EQ(multiplicity(2, true), 3);
    EXPECT_EQ(multiplicity(9, true), 12);
    EXPECT_EQ(multiplicity(6, false), 24);
    EXPECT_THROW(multiplicity(1, true), std::invalid_argument);
    EXPECT_THROW(multiplicity(0, false), std::invalid_argument);
}

TEST(Bounds, Examples) {
    EXPECT_EQ(rigorous_degree_bound(1, ord), 134);
    EXPECT_EQ(rigorous_degree_bound(0, ord), 8);
    EXPECT_EQ(genus_bound(0, ord), 21);
    // floor(903864 / 6720) and floor(18438 / 2160), by hand
    EXPECT_EQ(big(903864 / 6720), 134);
    EXPECT_EQ(big(18438 / 2160), 8);
    EXPECT_EQ(rigorous_degree_bound(0, wei), 0);
}

TEST(Bounds, WeierstrassMultipleOfFourUsesLowerHeight) {
    // g = 4: height 3 classes, count = E4(q^4) coefficient at q^{2*3+2-4} = q^4.
    const std::uint64_t count = e8::count_bisection_classes(4, 3, e8::BundleKind::weierstrass);
    EXPECT_EQ(count, 240u);
    const Rational summed = section_series(5).coeff(5) * Rational(1, 4);
    EXPECT_EQ(rigorous_degree_bound(4, wei), BigInt(summed.to_integer() / 240));
    EXPECT_EQ(e8::count_bisection_classes(4, 4, e8::BundleKind::weierstrass), 0u);
}

TEST(DegreeTable, Rows) {
    const auto rows = degree_table(4);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[0].g, 0);
    EXPECT_EQ(rows[0].type, ord);
    EXPECT_EQ(rows[0].conjectural_degree, 4);
    EXPECT_EQ(rows[0].rigorous_degree_bound, 8);
    EXPECT_EQ(rows[0].genus_bound, 21);
    EXPECT_EQ(rows[1].type, wei);
    EXPECT_EQ(rows[1].conjectural_degree, 0);
    EXPECT_EQ(rows[1].simple_telltales, 0);
    EXPECT_EQ(rows[1].nonsimple_telltales.at(1), 0);
    EXPECT_EQ(rows[2].conjectural_degree, 40);
    EXPECT_EQ(rows[2].rigorous_degree_bound, 134);
    EXPECT_EQ(rows[4].type, wei);
    EXPECT_EQ(rows[4].conjectural_degree, 198);
    for (const auto& r : rows) {
        EXPECT_LE(r.conjectural_degree, r.rigorous_degree_bound);
        const BigInt d = r.rigorous_degree_bound;
        EXPECT_EQ(r.genus_bound, BigInt((d - 1) * (d - 2) / 2));
        EXPECT_EQ(r.nonsimple_telltales.size(), static_cast<std::size_t>((r.g + 2) / 2));
        if (r.g > 0 || r.type == ord) {
            EXPECT_EQ(r.conjectural_degree, conjectural_degree(r.g, r.type));
            EXPECT_EQ(r.rigorous_degree_bound, rigorous_degree_bound(r.g, r.type));
        }
    }
    EXPECT_THROW(degree_table(-1), std::invalid_argument);
}

// ---------------------------------------------------------------- checks

TEST(Checks, Ramanujan) {
    EXPECT_TRUE(verify_ramanujan(200).passed());
}

TEST(Checks, DegreeConsistency) {
    const CheckReport o = verify_degree_consistency(ord, 50);
    const CheckReport w = verify_degree_consistency(wei, 50);
    EXPECT_TRUE(o.passed()) << o.detail();
    EXPECT_TRUE(w.passed()) << w.detail();
    EXPECT_EQ(o.precision(), 50);
    EXPECT_THROW(verify_degree_consistency(ord, 1), std::invalid_argument);
}

TEST(Checks, DegreeConsistencyRowZero) {
    // 8 = 1 * 8 + 0
    EXPECT_EQ(degree_series(ord, 2).coeff(2), Rational(1) * simple_telltale_series(ord, 2).coeff(2));
}

TEST(Checks, PhiDecomposition) {
    const CheckReport r = verify_phi_decomposition(100);
    EXPECT_TRUE(r.passed()) << r.detail();
    EXPECT_EQ(qs_substitute_power(nl_series_phi(4), 2).coeff(4), Rational(73512));
    EXPECT_EQ(qs_substitute_power(nl_series_phi(4), 2).coeff(0), Rational(-1));
    EXPECT_THROW(verify_phi_decomposition(3), std::invalid_argument);
}

TEST(Checks, E4InfinityClassIdentity) {
    const CheckReport r = verify_e4inf_class_identity(200);
    EXPECT_TRUE(r.passed());
    // q^1: 2 * 1 = 240 / 120; q^2: 2 * 8 = 2160 / 135
    EXPECT_EQ(Rational(240, 120), Rational(2 * 1));
    EXPECT_EQ(Rational(2160, 135), Rational(2 * 8));
}

TEST(Checks, HeightSums) {
    const CheckReport n0 = height_degree_sum_check(0);
    const CheckReport n1 = height_degree_sum_check(1);
    EXPECT_TRUE(n0.passed()) << n0.detail();
    EXPECT_TRUE(n1.passed()) << n1.detail();
    // Hand decompositions.
    EXPECT_EQ(section_series(2).coeff(2) * Rational(1, 4), Rational(2160 * 4 + 240 * 40 + 198));
    EXPECT_EQ(Rational(18438), Rational(2160 * 4 + 240 * 40 + 198));
    EXPECT_EQ(section_series(3).coeff(3) * Rational(1, 4),
              Rational(17280 * 4 + 6720 * 40 + 2160 * 192 + 240 * 624 + 1464));
    EXPECT_EQ(Rational(903864), Rational(17280 * 4 + 6720 * 40 + 2160 * 192 + 240 * 624 + 1464));
    for (std::int64_t n = 2; n <= 6; ++n) EXPECT_TRUE(height_degree_sum_check(n).passed()) << n;
    EXPECT_THROW(height_degree_sum_check(-1), std::invalid_argument);
}

TEST(Checks, TelltalesAgainstLattice) {
    const CheckReport o = verify_telltales_against_lattice(10, ord);
    const CheckReport w = verify_telltales_against_lattice(10, wei);
    EXPECT_TRUE(o.passed()) << o.detail();
    EXPECT_TRUE(w.passed()) << w.detail();
    EXPECT_NE(o.detail().find("g=1:28"), std::string::npos);
    EXPECT_NE(o.detail().find("g=2:64"), std::string::npos);
    EXPECT_NE(w.detail().find("g=2:120"), std::string::npos);
}

TEST(Checks, BoundDominance) {
    EXPECT_TRUE(verify_bound_dominance(40).passed());
    for (std::int64_t g = 0; g <= 40; ++g) {
        EXPECT_LE(conjectural_degree(g, ord), rigorous_degree_bound(g, ord)) << g;
        if (g % 2 == 0) EXPECT_LE(conjectural_degree(g, wei), rigorous_degree_bound(g, wei)) << g;
    }
}

TEST(Checks, ReportInvariant) {
    const CheckReport ok = CheckReport::pass("x", 3);
    EXPECT_TRUE(ok.passed());
    EXPECT_FALSE(ok.first_discrepancy().has_value());
    const CheckReport bad = CheckReport::fail("y", 3, Discrepancy{2, Rational(1), Rational(2)});
    EXPECT_FALSE(bad.passed());
    ASSERT_TRUE(bad.first_discrepancy().has_value());
    EXPECT_EQ(bad.first_discrepancy()->exponent, 2);

    CheckBuilder b("z", 5);
    EXPECT_TRUE(b.expect_equal(0, Rational(1), Rational(1)));
    EXPECT_FALSE(b.expect_equal(3, Rational(1), Rational(2)));
    EXPECT_FALSE(b.expect_equal(4, Rational(5), Rational(6)));
    const CheckReport r = b.finish();
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.first_discrepancy()->exponent, 3);
    EXPECT_EQ(r.first_discrepancy()->got, Rational(2));
}

TEST(Growth, ReportedConstant) {
    const GrowthReport g = genus_bound_growth(40);
    EXPECT_EQ(g.g_max, 40);
    EXPECT_GT(g.a.sign(), 0);
    EXPECT_GT(g.b.sign(), 0);
    EXPECT_EQ(g.c, (g.a / g.b) * (g.a / g.b) * Rational(1, 2));
    EXPECT_GE(g.max_ratio.sign(), 0);
    EXPECT_EQ(g.within, g.max_ratio <= g.c);
    EXPECT_THROW(genus_bound_growth(0), std::invalid_argument);
}
