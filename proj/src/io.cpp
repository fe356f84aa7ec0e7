#include "severi/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace severi::io {

json to_json(const QSeries& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
    return json{{"precision", f.precision()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const json& j) {
    if (!j.is_object() || !j.contains("precision") || !j.contains("coeffs")) {
        throw std::invalid_argument("series JSON needs \"precision\" and \"coeffs\"");
    }
    const auto& cs = j.at("coeffs");
    if (!cs.is_array() || !j.at("precision").is_number_unsigned()) {
        throw std::invalid_argument("series JSON has wrongly typed fields");
    }
    const auto precision = j.at("precision").get<std::size_t>();
    if (cs.size() != precision + 1) {
        throw std::invalid_argument("series JSON: expected " + std::to_string(precision + 1) + " coefficients, got " +
                                    std::to_string(cs.size()));
    }
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (const auto& c : cs) {
        if (!c.is_string()) throw std::invalid_argument("series coefficients must be strings");
        v.push_back(Rational::parse(c.get<std::string>()));
    }
    return QSeries(std::move(v));
}

json to_json(const e8::E8Vector& v) {
    return json{{"doubled", true}, {"coords", v.doubled()}};
}

e8::E8Vector vector_from_json(const json& j) {
    if (!j.is_object() || j.value("doubled", false) != true || !j.contains("coords")) {
        throw std::invalid_argument("vector JSON needs \"doubled\": true and \"coords\"");
    }
    const auto& cs = j.at("coords");
    if (!cs.is_array() || cs.size() != 8) throw std::invalid_argument("vector JSON needs 8 coordinates");
    e8::E8Vector::Coords d{};
    for (std::size_t i = 0; i < 8; ++i) d[i] = cs[i].get<std::int32_t>();
    return e8::E8Vector::from_doubled(d);
}

json to_json(const CheckReport& r) {
    json j{{"name", r.name()},
           {"precision", r.precision()},
           {"status", r.passed() ? "pass" : "fail"},
           {"first_discrepancy", nullptr},
           {"detail", r.detail()}};
    if (const auto& d = r.first_discrepancy()) {
        j["first_discrepancy"] =
            json{{"exponent", d->exponent}, {"expected", d->expected.to_string()}, {"got", d->got.to_string()}};
    }
    return j;
}

json to_json(const DegreeRow& row) {
    json nonsimple = json::object();
    for (const auto& [m, count] : row.nonsimple_telltales) nonsimple[std::to_string(m)] = count.get_str();
    return json{{"g", row.g},
                {"type", to_string(row.type)},
                {"conjectural_degree", row.conjectural_degree.get_str()},
                {"simple_telltales", row.simple_telltales.get_str()},
                {"nonsimple_telltales", std::move(nonsimple)},
                {"rigorous_degree_bound", row.rigorous_degree_bound.get_str()},
                {"genus_bound", row.genus_bound.get_str()}};
}

std::string degree_table_csv(const std::vector<DegreeRow>& rows) {
    std::int64_t max_m = 0;
    for (const auto& r : rows) {
        if (!r.nonsimple_telltales.empty()) max_m = std::max(max_m, r.nonsimple_telltales.rbegin()->first);
    }
    std::ostringstream os;
    os << "g,type,degree,simple";
    for (std::int64_t m = 1; m <= max_m; ++m) os << ",nonsimple_m" << m;
    os << ",bound,genus_bound\n";
    for (const auto& r : rows) {
        os << r.g << ',' << to_string(r.type) << ',' << r.conjectural_degree.get_str() << ','
           << r.simple_telltales.get_str();
        for (std::int64_t m = 1; m <= max_m; ++m) {
            const auto it = r.nonsimple_telltales.find(m);
            os << ',' << (it == r.nonsimple_telltales.end() ? std::string("0") : it->second.get_str());
        }
        os << ',' << r.rigorous_degree_bound.get_str() << ',' << r.genus_bound.get_str() << '\n';
    }
    return os.str();
}

}  // namespace severi::io
