#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "severi/rational.hpp"

namespace severi {

struct Discrepancy {
    std::int64_t exponent = 0;
    Rational expected;
    Rational got;
};

/// Outcome of one named verification. A report passes exactly when it
/// carries no discrepancy; the factories are the only way to build one.
class CheckReport {
public:
    static CheckReport pass(std::string name, std::int64_t precision, std::string detail = {});
    static CheckReport fail(std::string name, std::int64_t precision, Discrepancy first,
                            std::string detail = {});

    const std::string& name() const { return name_; }
    std::int64_t precision() const { return precision_; }
    bool passed() const { return !first_discrepancy_.has_value(); }
    const std::optional<Discrepancy>& first_discrepancy() const { return first_discrepancy_; }
    const std::string& detail() const { return detail_; }

private:
    CheckReport() = default;

    std::string name_;
    std::int64_t precision_ = 0;
    std::optional<Discrepancy> first_discrepancy_;
    std::string detail_;
};

/// Folds a sequence of (exponent, expected, got) comparisons into a report,
/// keeping the first mismatch.
class CheckBuilder {
public:
    CheckBuilder(std::string name, std::int64_t precision)
        : name_(std::move(name)), precision_(precision) {}

    /// Returns true when the values agree.
    bool expect_equal(std::int64_t exponent, const Rational& expected, const Rational& got);

    void set_detail(std::string detail) { detail_ = std::move(detail); }
    bool ok() const { return !first_.has_value(); }

    CheckReport finish() const;

private:
    std::string name_;
    std::int64_t precision_;
    std::optional<Discrepancy> first_;
    std::string detail_;
};

}  // namespace severi
