#include "severi/report.hpp"

namespace severi {

CheckReport CheckReport::pass(std::string name, std::int64_t precision, std::string detail) {
    CheckReport r;
    r.name_ = std::move(name);
    r.precision_ = precision;
    r.detail_ = std::move(detail);
    return r;
}

CheckReport CheckReport::fail(std::string name, std::int64_t precision, Discrepancy first,
                              std::string detail) {
    CheckReport r = pass(std::move(name), precision, std::move(detail));
    r.first_discrepancy_ = std::move(first);
    return r;
}

bool CheckBuilder::expect_equal(std::int64_t exponent, const Rational& expected, const Rational& got) {
    if (expected == got) return true;
    if (!first_) first_ = Discrepancy{exponent, expected, got};
    return false;
}

CheckReport CheckBuilder::finish() const {
    if (first_) return CheckReport::fail(name_, precision_, *first_, detail_);
    return CheckReport::pass(name_, precision_, detail_);
}

}  // namespace severi
