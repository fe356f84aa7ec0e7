#include "severi/e8_kernels.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace severi::e8::kernels {

std::int64_t isqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace detail {

std::vector<std::array<std::int32_t, 2>> prefixes(std::int64_t budget) {
    std::vector<std::array<std::int32_t, 2>> out;
    const std::int64_t bound = isqrt(budget);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        const int parity = static_cast<int>(x & 1);
        if (x * x + 7 * parity > budget) continue;
        const std::int64_t room = budget - x * x - 6 * parity;
        const std::int64_t b1 = isqrt(room);
        std::int64_t y = -b1;
        if ((y & 1) != parity) ++y;
        for (; y <= b1; y += 2) {
            out.push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
        }
    }
    return out;
}

}  // namespace detail

namespace {

void require_even(std::int64_t norm) {
    if (norm < 0 || norm % 2 != 0) {
        throw std::invalid_argument("E8 is even: no vectors of norm " + std::to_string(norm));
    }
}

}  // namespace

namespace serial {

std::uint64_t count_norm(std::int64_t norm) {
    require_even(norm);
    std::uint64_t n = 0;
    for_each_norm_serial(norm, [&](const Coords&) { ++n; });
    return n;
}

std::vector<E8Vector> enumerate_norm(std::int64_t norm) {
    require_even(norm);
    std::vector<E8Vector> out;
    for_each_norm_serial(norm, [&](const Coords& d) { out.push_back(E8Vector::from_doubled(d)); });
    return out;
}

std::array<std::uint64_t, 256> class_histogram(std::int64_t norm) {
    require_even(norm);
    std::array<std::uint64_t, 256> hist{};
    for_each_norm_serial(norm, [&](const Coords& d) { ++hist[class_bits(E8Vector::from_doubled(d))]; });
    return hist;
}

}  // namespace serial

namespace parallel {

std::uint64_t count_norm(std::int64_t norm) {
    require_even(norm);
    const std::int64_t budget = doubled_budget(norm);
    const auto tasks = detail::prefixes(budget);
    const auto ntasks = static_cast<std::int64_t>(tasks.size());
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::int64_t t = 0; t < ntasks; ++t) {
        std::uint64_t local = 0;
        auto visit = [&](const Coords&) { ++local; };
        detail::run_prefix(tasks[static_cast<std::size_t>(t)], budget, visit);
        total += local;
    }
    return total;
}

std::vector<E8Vector> enumerate_norm(std::int64_t norm) {
    require_even(norm);
    const std::int64_t budget = doubled_budget(norm);
    const auto tasks = detail::prefixes(budget);
    const auto ntasks = static_cast<std::int64_t>(tasks.size());
    std::vector<std::vector<E8Vector>> parts(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < ntasks; ++t) {
        auto& part = parts[static_cast<std::size_t>(t)];
        auto visit = [&](const Coords& d) { part.push_back(E8Vector::from_doubled(d)); };
        detail::run_prefix(tasks[static_cast<std::size_t>(t)], budget, visit);
    }
    // Prefixes are in lexicographic order, so concatenation is canonical.
    std::size_t size = 0;
    for (const auto& p : parts) size += p.size();
    std::vector<E8Vector> out;
    out.reserve(size);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::array<std::uint64_t, 256> class_histogram(std::int64_t norm) {
    require_even(norm);
    const std::int64_t budget = doubled_budget(norm);
    const auto tasks = detail::prefixes(budget);
    const auto ntasks = static_cast<std::int64_t>(tasks.size());
    std::array<std::uint64_t, 256> hist{};
#pragma omp parallel
    {
        std::array<std::uint64_t, 256> local{};
        auto visit = [&](const Coords& d) { ++local[class_bits(E8Vector::from_doubled(d))]; };
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t t = 0; t < ntasks; ++t) {
            detail::run_prefix(tasks[static_cast<std::size_t>(t)], budget, visit);
        }
#pragma omp critical
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
    }
    return hist;
}

}  // namespace parallel

}  // namespace severi::e8::kernels
