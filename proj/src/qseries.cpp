#include "severi/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace severi {

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
}

QSeries QSeries::zero(std::size_t precision) {
    return QSeries(std::vector<Rational>(precision + 1));
}

QSeries QSeries::constant(const Rational& c, std::size_t precision) {
    std::vector<Rational> v(precision + 1);
    v[0] = c;
    return QSeries(std::move(v));
}

const Rational& QSeries::coeff(std::size_t n) const {
    if (n > precision()) {
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond precision " +
                                std::to_string(precision()));
    }
    return coeffs_[n];
}

QSeries QSeries::truncate(std::size_t n) const {
    if (n > precision()) {
        throw std::out_of_range("cannot truncate precision " + std::to_string(precision()) + " to " +
                                std::to_string(n));
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1));
}

QSeries QSeries::operator-() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return QSeries(std::move(v));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return QSeries(std::move(v));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
    return QSeries(std::move(v));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    return QSeries(kernels::convolve_parallel(a.coeffs_, b.coeffs_, n));
}

QSeries operator*(const Rational& c, const QSeries& f) {
    std::vector<Rational> v;
    v.reserve(f.coeffs_.size());
    for (const auto& x : f.coeffs_) v.push_back(c * x);
    return QSeries(std::move(v));
}

QSeries operator+(const QSeries& f, const Rational& c) {
    std::vector<Rational> v = f.coeffs_;
    v[0] += c;
    return QSeries(std::move(v));
}

QSeries operator-(const QSeries& f, const Rational& c) { return f + (-c); }

BigInt divisor_sum(unsigned k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisor_sum is undefined at n = 0");
    BigInt total = 0;
    BigInt power;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(power.get_mpz_t(), d, k);
        total += power;
        const std::uint64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(power.get_mpz_t(), e, k);
            total += power;
        }
    }
    return total;
}

QSeries eisenstein(int weight, std::size_t precision) {
    long scale = 0;
    unsigned k = 0;
    switch (weight) {
        case 2: scale = -24; k = 1; break;
        case 4: scale = 240; k = 3; break;
        case 6: scale = -504; k = 5; break;
        default:
            throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(weight) +
                                        " (expected 2, 4 or 6)");
    }
    std::vector<Rational> v(precision + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= precision; ++n) v[n] = Rational(BigInt(BigInt(scale) * divisor_sum(k, n)));
    return QSeries(std::move(v));
}

QSeries theta(std::size_t precision) {
    std::vector<Rational> v(precision + 1);
    v[0] = 1;
    for (std::size_t n = 1; n * n <= precision; ++n) v[n * n] = 2;
    return QSeries(std::move(v));
}

QSeries e4_infinity(std::size_t precision) {
    std::vector<Rational> v(precision + 1);
    for (std::size_t n = 1; n <= precision; ++n) {
        BigInt c = divisor_sum(3, n);
        if (n % 2 == 0) c -= divisor_sum(3, n / 2);
        v[n] = Rational(c);
    }
    return QSeries(std::move(v));
}

QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries qs_sub(const QSeries& a, const QSeries& b) { return a - b; }
QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
QSeries qs_scale(const Rational& c, const QSeries& f) { return c * f; }

QSeries qs_derive(const QSeries& f) {
    std::vector<Rational> v(f.precision() + 1);
    for (std::size_t n = 1; n <= f.precision(); ++n) {
        v[n] = Rational(static_cast<std::int64_t>(n)) * f.coeffs()[n];
    }
    return QSeries(std::move(v));
}

QSeries qs_substitute_power(const QSeries& f, std::size_t m) {
    if (m == 0) throw std::invalid_argument("substitution q -> q^0 is not allowed");
    std::vector<Rational> v(f.precision() + 1);
    for (std::size_t n = 0; n * m <= f.precision(); ++n) v[n * m] = f.coeffs()[n];
    return QSeries(std::move(v));
}

QSeries qs_parity_part(const QSeries& f, Parity parity) {
    const std::size_t keep = parity == Parity::even ? 0 : 1;
    std::vector<Rational> v(f.precision() + 1);
    for (std::size_t n = keep; n <= f.precision(); n += 2) v[n] = f.coeffs()[n];
    return QSeries(std::move(v));
}

const Rational& qs_coeff(const QSeries& f, std::size_t n) { return f.coeff(n); }

namespace kernels {

namespace {

Rational convolve_at(std::span<const Rational> a, std::span<const Rational> b, std::size_t n) {
    Rational acc;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero() || b[n - i].is_zero()) continue;
        acc.add_product(a[i], b[n - i]);
    }
    return acc;
}

void check_lengths(std::span<const Rational> a, std::span<const Rational> b, std::size_t precision) {
    if (a.size() <= precision || b.size() <= precision) {
        throw std::invalid_argument("convolution operands shorter than requested precision");
    }
}

}  // namespace

std::vector<Rational> convolve_serial(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t precision) {
    check_lengths(a, b, precision);
    std::vector<Rational> out(precision + 1);
    for (std::size_t n = 0; n <= precision; ++n) out[n] = convolve_at(a, b, n);
    return out;
}

std::vector<Rational> convolve_parallel(std::span<const Rational> a, std::span<const Rational> b,
                                        std::size_t precision) {
    check_lengths(a, b, precision);
    std::vector<Rational> out(precision + 1);
    const auto last = static_cast<std::int64_t>(precision);
    // Work per coefficient grows with n; dynamic scheduling keeps threads busy.
#pragma omp parallel for schedule(dynamic, 8) if (precision >= 64)
    for (std::int64_t n = 0; n <= last; ++n) {
        out[static_cast<std::size_t>(n)] = convolve_at(a, b, static_cast<std::size_t>(n));
    }
    return out;
}

}  // namespace kernels

}  // namespace severi
