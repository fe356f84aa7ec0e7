#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "severi/qseries.hpp"
#include "support/generators.hpp"

using namespace severi;

namespace {

// Independent oracle: trial division with machine integers.
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

std::vector<std::int64_t> ints(const QSeries& f) {
    std::vector<std::int64_t> out;
    for (const auto& c : f.coeffs()) out.push_back(c.to_integer().get_si());
    return out;
}

QSeries from_ints(std::vector<std::int64_t> v) {
    std::vector<Rational> c;
    for (auto x : v) c.emplace_back(x);
    return QSeries(std::move(c));
}

}  // namespace

TEST(DivisorSum, Examples) {
    EXPECT_EQ(divisor_sum(1, 1), 1);
    EXPECT_EQ(divisor_sum(3, 2), 9);
    EXPECT_EQ(divisor_sum(3, 4), 73);
    EXPECT_EQ(divisor_sum(0, 12), 6);
    EXPECT_THROW(divisor_sum(3, 0), std::invalid_argument);
}

TEST(DivisorSum, MatchesTrialDivision) {
    for (unsigned k = 0; k <= 5; ++k) {
        for (std::int64_t n = 1; n <= 300; ++n) {
            ASSERT_EQ(divisor_sum(k, static_cast<std::uint64_t>(n)), BigInt(static_cast<long>(sigma(k, n))))
                << "k=" << k << " n=" << n;
        }
    }
}

TEST(DivisorSum, LargeArgumentIsExact) {
    // sigma_5(2^20) = (2^120 - 1)/(2^5 - 1)
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 105);
    expected = (expected - 1) / 31;
    EXPECT_EQ(divisor_sum(5, 1u << 20), expected);
}

TEST(Eisenstein, Examples) {
    EXPECT_EQ(ints(eisenstein(4, 2)), (std::vector<std::int64_t>{1, 240, 2160}));
    EXPECT_EQ(ints(eisenstein(2, 1)), (std::vector<std::int64_t>{1, -24}));
    EXPECT_EQ(ints(eisenstein(6, 1)), (std::vector<std::int64_t>{1, -504}));
    EXPECT_EQ(eisenstein(4, 0).precision(), 0u);
    EXPECT_THROW(eisenstein(8, 5), std::invalid_argument);
    EXPECT_THROW(eisenstein(0, 5), std::invalid_argument);
}

TEST(Eisenstein, MatchesOracle) {
    const QSeries e2 = eisenstein(2, 60), e4 = eisenstein(4, 60), e6 = eisenstein(6, 60);
    for (std::size_t n = 1; n <= 60; ++n) {
        const auto m = static_cast<std::int64_t>(n);
        EXPECT_EQ(e2.coeff(n), Rational(-24 * sigma(1, m)));
        EXPECT_EQ(e4.coeff(n), Rational(240 * sigma(3, m)));
        EXPECT_EQ(e6.coeff(n), Rational(-504 * sigma(5, m)));
    }
}

TEST(Eisenstein, TrivialCoefficientBound) {
    const QSeries e4 = eisenstein(4, 200), e6 = eisenstein(6, 200);
    for (std::size_t n = 1; n <= 200; ++n) {
        const BigInt nn(static_cast<unsigned long>(n));
        const BigInt s0 = divisor_sum(0, n);
        EXPECT_LE(abs(e4.coeff(n).to_integer()), 240 * nn * nn * nn * s0);
        EXPECT_LE(abs(e6.coeff(n).to_integer()), 504 * nn * nn * nn * nn * nn * s0);
    }
}

TEST(Theta, Examples) {
    EXPECT_EQ(ints(theta(4)), (std::vector<std::int64_t>{1, 2, 0, 0, 2}));
    EXPECT_EQ(ints(theta(0)), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(ints(theta(9)), (std::vector<std::int64_t>{1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
}

TEST(E4Infinity, Examples) {
    EXPECT_EQ(ints(e4_infinity(4)), (std::vector<std::int64_t>{0, 1, 8, 28, 64}));
    EXPECT_EQ(e4_infinity(6).coeff(0), Rational(0));
    EXPECT_EQ(e4_infinity(6).coeff(6), Rational(224));
}

TEST(E4Infinity, EqualsScaledDifference) {
    const std::size_t n = 200;
    const QSeries e4 = eisenstein(4, n);
    EXPECT_EQ(e4_infinity(n), qs_scale(Rational(1, 240), e4 - qs_substitute_power(e4, 2)));
}

TEST(QSeries, ConstructionAndAccess) {
    EXPECT_THROW(QSeries(std::vector<Rational>{}), std::invalid_argument);
    const QSeries e4 = eisenstein(4, 50);
    EXPECT_EQ(qs_coeff(e4, 3), Rational(6720));
    EXPECT_EQ(qs_coeff(eisenstein(2, 5), 0), Rational(1));
    EXPECT_THROW(qs_coeff(e4, 51), std::out_of_range);
    EXPECT_THROW(e4.truncate(51), std::out_of_range);
    EXPECT_EQ(e4.truncate(2), eisenstein(4, 2));
    EXPECT_EQ(QSeries::zero(3).coeffs().size(), 4u);
    EXPECT_EQ(QSeries::constant(Rational(7), 2), from_ints({7, 0, 0}));
}

TEST(QSeries, RingExamples) {
    const QSeries e4 = eisenstein(4, 10);
    EXPECT_EQ(qs_mul(e4, e4).coeff(2), Rational(61920));
    EXPECT_EQ(qs_add(e4, QSeries::zero(10)), e4);
    EXPECT_EQ(qs_sub(e4, e4), QSeries::zero(10));
    EXPECT_EQ(qs_scale(Rational(1, 2), from_ints({2, 4})), from_ints({1, 2}));
    EXPECT_EQ(from_ints({1, 2}) + Rational(3), from_ints({4, 2}));
    EXPECT_EQ(from_ints({1, 2}) - Rational(3), from_ints({-2, 2}));
    EXPECT_EQ(-from_ints({1, -2}), from_ints({-1, 2}));
}

TEST(QSeries, MixedPrecisionTruncates) {
    const QSeries a = eisenstein(4, 10), b = eisenstein(2, 4);
    EXPECT_EQ((a + b).precision(), 4u);
    EXPECT_EQ((a - b).precision(), 4u);
    EXPECT_EQ((a * b).precision(), 4u);
    EXPECT_EQ(a * b, a.truncate(4) * b);
}

TEST(QSeries, Derivative) {
    EXPECT_EQ(qs_derive(eisenstein(4, 3)).coeff(1), Rational(240));
    EXPECT_EQ(qs_derive(QSeries::constant(Rational(5), 4)), QSeries::zero(4));
}

TEST(QSeries, RamanujanToFifty) {
    const std::size_t n = 50;
    const QSeries e2 = eisenstein(2, n), e4 = eisenstein(4, n), e6 = eisenstein(6, n);
    EXPECT_EQ(qs_derive(e4), Rational(1, 3) * (e2 * e4 - e6));
    // Companions with the same shape, as extra oracle coverage.
    EXPECT_EQ(qs_derive(e2), Rational(1, 12) * (e2 * e2 - e4));
    EXPECT_EQ(qs_derive(e6), Rational(1, 2) * (e2 * e6 - e4 * e4));
}

TEST(QSeries, E4SquaredIsE8) {
    // E4^2 = 1 + 480 sum sigma_7(n) q^n
    const QSeries sq = eisenstein(4, 30) * eisenstein(4, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(sq.coeff(n), Rational(480 * sigma(7, static_cast<std::int64_t>(n))));
    }
}

TEST(QSeries, SubstitutePower) {
    const QSeries e4 = eisenstein(4, 12);
    EXPECT_EQ(qs_substitute_power(e4, 2).coeff(2), Rational(240));
    EXPECT_EQ(qs_substitute_power(e4, 1), e4);
    EXPECT_EQ(qs_substitute_power(e4, 4).coeff(3), Rational(0));
    EXPECT_EQ(qs_substitute_power(e4, 4).precision(), 12u);
    EXPECT_EQ(qs_substitute_power(e4, 4).coeff(12), Rational(6720));
    EXPECT_THROW(qs_substitute_power(e4, 0), std::invalid_argument);
}

TEST(QSeries, ParityPart) {
    const QSeries th = theta(20);
    EXPECT_EQ(ints(qs_parity_part(th, Parity::even)),
              (std::vector<std::int64_t>{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0}));
    EXPECT_EQ(qs_parity_part(qs_substitute_power(eisenstein(4, 20), 2), Parity::odd), QSeries::zero(20));
}

TEST(QSeriesProperty, RingAxioms) {
    prop::Gen gen(0xa11ce);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(0, 12));
        const QSeries a = gen.series(n), b = gen.series(n), c = gen.series(n + 3);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * QSeries::constant(Rational(1), n), a);
        EXPECT_EQ(a + QSeries::zero(n), a);
        const Rational s = gen.rational();
        EXPECT_EQ(s * (a + b), s * a + s * b);
    }
}

TEST(QSeriesProperty, DerivationIsLeibniz) {
    prop::Gen gen(0xd0d0);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(0, 15));
        const QSeries a = gen.series(n), b = gen.series(n);
        EXPECT_EQ(qs_derive(a * b), qs_derive(a) * b + a * qs_derive(b));
    }
}

TEST(QSeriesProperty, SubstitutionComposesAndIsMultiplicative) {
    prop::Gen gen(0xc0de);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(0, 30));
        const auto a = static_cast<std::size_t>(gen.integer(1, 4));
        const auto b = static_cast<std::size_t>(gen.integer(1, 4));
        const QSeries f = gen.series(n), g = gen.series(n);
        EXPECT_EQ(qs_substitute_power(qs_substitute_power(f, a), b), qs_substitute_power(f, a * b));
        EXPECT_EQ(qs_substitute_power(f * g, a), qs_substitute_power(f, a) * qs_substitute_power(g, a));
    }
}

TEST(QSeriesProperty, ParityPartsPartition) {
    prop::Gen gen(0xbeef);
    for (int i = 0; i < 40; ++i) {
        const QSeries f = gen.series(static_cast<std::size_t>(gen.integer(0, 20)));
        const QSeries even = qs_parity_part(f, Parity::even), odd = qs_parity_part(f, Parity::odd);
        EXPECT_EQ(even + odd, f);
        EXPECT_EQ(qs_parity_part(even, Parity::odd), QSeries::zero(f.precision()));
        // f(-q) = even - odd
        std::vector<Rational> neg(f.coeffs().begin(), f.coeffs().end());
        for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
        EXPECT_EQ(QSeries(neg), even - odd);
    }
}

TEST(ConvolutionKernels, ParallelMatchesSerial) {
    prop::Gen gen(0xfeed);
    for (std::size_t n : {0u, 1u, 7u, 63u, 64u, 65u, 130u}) {
        const QSeries a = gen.series(n), b = gen.series(n);
        EXPECT_EQ(kernels::convolve_serial(a.coeffs(), b.coeffs(), n),
                  kernels::convolve_parallel(a.coeffs(), b.coeffs(), n))
            << "precision " << n;
    }
    const QSeries e4 = eisenstein(4, 200), e6 = eisenstein(6, 200);
    EXPECT_EQ(kernels::convolve_serial(e4.coeffs(), e6.coeffs(), 200),
              kernels::convolve_parallel(e4.coeffs(), e6.coeffs(), 200));
}

TEST(ConvolutionKernels, MatchesSchoolbook) {
    prop::Gen gen(0xabc);
    const QSeries a = gen.series(20), b = gen.series(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        Rational s;
        for (std::size_t i = 0; i <= n; ++i) s = s + a.coeff(i) * b.coeff(n - i);
        EXPECT_EQ((a * b).coeff(n), s);
    }
    EXPECT_THROW(kernels::convolve_serial(a.coeffs(), b.coeffs(), 21), std::invalid_argument);
}
