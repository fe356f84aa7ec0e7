#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

enum class Parity { even, odd };

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over the rationals.
///
/// Values are immutable: every operation returns a new series. Binary
/// operations truncate to the smaller of the two precisions; reading a
/// coefficient beyond the precision is an error rather than an implicit zero.
class QSeries {
public:
    /// Precision is coeffs.size() - 1; an empty vector is rejected.
    explicit QSeries(std::vector<Rational> coeffs);

    static QSeries zero(std::size_t precision);
    static QSeries constant(const Rational& c, std::size_t precision);

    std::size_t precision() const { return coeffs_.size() - 1; }

    /// Throws std::out_of_range when n > precision().
    const Rational& coeff(std::size_t n) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Copy truncated to precision n (n <= precision()).
    QSeries truncate(std::size_t n) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& f);
    friend QSeries operator+(const QSeries& f, const Rational& c);
    friend QSeries operator-(const QSeries& f, const Rational& c);

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

/// sigma_k(n) = sum of d^k over the divisors d of n. Throws for n == 0.
BigInt divisor_sum(unsigned k, std::uint64_t n);

/// Normalized Eisenstein series E2, E4 or E6 to precision N.
QSeries eisenstein(int weight, std::size_t precision);

/// 1 + 2 sum_{n>=1} q^{n^2}.
QSeries theta(std::size_t precision);

/// (E4(q) - E4(q^2)) / 240, built directly from divisor sums.
QSeries e4_infinity(std::size_t precision);

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scale(const Rational& c, const QSeries& f);

/// D = q d/dq.
QSeries qs_derive(const QSeries& f);

/// f(q^m); same precision as f. Throws for m == 0.
QSeries qs_substitute_power(const QSeries& f, std::size_t m);

/// Keeps only the exponents of the given parity (0 counts as even).
QSeries qs_parity_part(const QSeries& f, Parity parity);

const Rational& qs_coeff(const QSeries& f, std::size_t n);

namespace kernels {

/// Reference Cauchy product, one output coefficient at a time.
std::vector<Rational> convolve_serial(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t precision);

/// OpenMP version of convolve_serial. Each output coefficient is summed in the
/// same order as the serial kernel, so results are identical.
std::vector<Rational> convolve_parallel(std::span<const Rational> a, std::span<const Rational> b,
                                        std::size_t precision);

}  // namespace kernels

}  // namespace severi
