#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "severi/e8.hpp"
#include "severi/qseries.hpp"
#include "severi/report.hpp"
#include "severi/severi_series.hpp"

namespace severi::io {

using nlohmann::json;

/// { "precision": N, "coeffs": ["p/q", ...] }
json to_json(const QSeries& f);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
QSeries qseries_from_json(const json& j);

/// { "doubled": true, "coords": [d1, ..., d8] }
json to_json(const e8::E8Vector& v);
e8::E8Vector vector_from_json(const json& j);

json to_json(const CheckReport& r);
json to_json(const DegreeRow& row);

/// Header: g,type,degree,simple,nonsimple_m1..nonsimple_mK,bound,genus_bound
/// where K covers the largest g in the table.
std::string degree_table_csv(const std::vector<DegreeRow>& rows);

}  // namespace severi::io
