#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "severi/report.hpp"

namespace severi::checks {

struct Limits {
    std::int64_t precision = 200;
    std::int64_t norm_cap = 60;
};

/// Enumeration counts at every even norm 2..cap against 240 sigma_3(norm/2).
CheckReport theta_e4(std::int64_t norm_cap);

/// 1 + 120 + 135 split of E8/2E8, and class counts constant within each
/// parity type at every even norm up to the cap.
CheckReport class_uniformity(std::int64_t norm_cap);

/// Reflection orbits of a root and of a norm-4 vector, plus the norm-4 shapes.
CheckReport transitivity();

/// Check names in declaration order.
const std::vector<std::string>& names();

bool is_known(const std::string& name);

/// Runs one named check. Some checks yield one report per bundle type.
/// Throws std::invalid_argument for unknown names.
std::vector<CheckReport> run(const std::string& name, const Limits& limits);

/// All checks in declaration order.
std::vector<CheckReport> run_all(const Limits& limits);

}  // namespace severi::checks
