#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "severi/checks.hpp"
#include "severi/e8.hpp"
#include "severi/io.hpp"
#include "severi/qseries.hpp"
#include "severi/severi_series.hpp"

namespace severi::cli {

namespace {

using nlohmann::json;
using e8::E8Vector;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Orbits live inside one norm shell; past this norm the shell is too large
// for an in-memory breadth-first search.
constexpr std::int64_t kOrbitNormLimit = 12;

struct Config {
    std::int64_t precision = 200;
    std::int64_t norm_cap = 60;
    std::string threads = "auto";
    std::string format = "json";
    std::string out_path;
    bool seed_table = false;
};

json config_json(const Config& c) {
    return json{{"precision", c.precision}, {"norm_cap", c.norm_cap}, {"format", c.format}};
}

/// What a command produced, in all three formats.
struct Payload {
    json results = json::array();
    std::string csv;
    std::string text;
    int code = success;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// ---------------------------------------------------------------- arguments

void apply_threads(const std::string& spec) {
    if (spec == "auto") return;
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(spec, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != spec.size() || k < 1) throw UsageError("--threads expects a positive integer or \"auto\", got " + spec);
    omp_set_num_threads(k);
}

void validate(const Config& c) {
    if (c.precision < 0) throw UsageError("--precision must be nonnegative");
    if (c.norm_cap < 2 || c.norm_cap % 2 != 0) throw UsageError("--norm-cap must be an even integer >= 2");
    if (c.format != "json" && c.format != "csv" && c.format != "text") {
        throw UsageError("--format must be json, csv or text");
    }
}

void require_norm(std::int64_t norm, const Config& c) {
    if (norm < 0 || norm % 2 != 0) throw UsageError("norm must be a nonnegative even integer, got " + std::to_string(norm));
    if (norm > c.norm_cap) {
        throw UsageError("norm " + std::to_string(norm) + " exceeds the enumeration cap " + std::to_string(c.norm_cap) +
                         " (raise --norm-cap)");
    }
}

E8Vector parse_vector(const std::string& spec) {
    if (spec == "root") return E8Vector::from_doubled({2, 2, 0, 0, 0, 0, 0, 0});
    if (spec == "norm4") return E8Vector::from_doubled({4, 0, 0, 0, 0, 0, 0, 0});
    if (spec == "zero") return E8Vector{};
    E8Vector::Coords d{};
    std::stringstream ss(spec);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 8) throw UsageError("vector needs exactly 8 doubled coordinates: " + spec);
        try {
            std::size_t used = 0;
            d[i] = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad coordinate \"" + item + "\" in " + spec);
        }
        ++i;
    }
    if (i != 8) throw UsageError("vector needs exactly 8 doubled coordinates: " + spec);
    if (!E8Vector::is_member(d)) throw UsageError("not an E8 vector in doubled coordinates: " + spec);
    return E8Vector::from_doubled(d);
}

// ---------------------------------------------------------------- series

const std::map<std::string, std::function<QSeries(std::size_t)>>& series_table() {
    static const std::map<std::string, std::function<QSeries(std::size_t)>> table = {
        {"E2", [](std::size_t n) { return eisenstein(2, n); }},
        {"E4", [](std::size_t n) { return eisenstein(4, n); }},
        {"E6", [](std::size_t n) { return eisenstein(6, n); }},
        {"theta", theta},
        {"E4inf", e4_infinity},
        {"phi", nl_series_phi},
        {"psi_ex", excess_correction},
        {"psi_no", nodal_correction},
        {"psi_sec", section_series},
        {"deg_ord", [](std::size_t n) { return degree_series(BundleType::ordinary, n); }},
        {"deg_wei", [](std::size_t n) { return degree_series(BundleType::weierstrass, n); }},
    };
    return table;
}

Payload cmd_series(const std::string& name, const Config& c) {
    const auto& table = series_table();
    const auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [k, _] : table) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown series \"" + name + "\" (known: " + known + ")");
    }
    const QSeries f = it->second(static_cast<std::size_t>(c.precision));
    Payload p;
    p.results.push_back(json{{"name", name}, {"series", io::to_json(f)}});
    std::ostringstream csv, text;
    csv << "exponent,coeff\n";
    text << name << " to precision " << f.precision() << "\n";
    for (std::size_t n = 0; n <= f.precision(); ++n) {
        csv << n << ',' << f.coeff(n).to_string() << '\n';
        text << "q^" << n << ": " << f.coeff(n).to_string() << '\n';
    }
    p.csv = csv.str();
    p.text = text.str();
    return p;
}

// ---------------------------------------------------------------- e8

Payload e8_count(std::int64_t norm, const Config& c) {
    require_norm(norm, c);
    const std::uint64_t n = e8::count_norm(norm);
    Payload p;
    p.results.push_back(json{{"norm", norm}, {"count", n}});
    p.csv = "norm,count\n" + std::to_string(norm) + "," + std::to_string(n) + "\n";
    p.text = "norm " + std::to_string(norm) + ": " + std::to_string(n) + " vectors\n";
    return p;
}

Payload e8_classes() {
    const e8::ClassCounts k = e8::classify_classes();
    Payload p;
    p.results.push_back(
        json{{"zero", k.zero}, {"root_type", k.root_type}, {"norm4_type", k.norm4_type}, {"total", k.total()}});
    p.csv = "parity,classes\nzero," + std::to_string(k.zero) + "\nroot_type," + std::to_string(k.root_type) +
            "\nnorm4_type," + std::to_string(k.norm4_type) + "\n";
    p.text = std::to_string(k.zero) + "/" + std::to_string(k.root_type) + "/" + std::to_string(k.norm4_type) + " (" +
             std::to_string(k.total()) + " classes)\n";
    return p;
}

Payload e8_orbit(const std::string& seed_spec, const Config& c) {
    const E8Vector seed = parse_vector(seed_spec);
    require_norm(seed.norm(), c);
    if (seed.norm() > kOrbitNormLimit) {
        throw UsageError("orbit seeds are limited to norm " + std::to_string(kOrbitNormLimit) + ", got " +
                         std::to_string(seed.norm()));
    }
    const auto orbit = e8::orbit(seed, e8::roots());
    const std::uint64_t shell = e8::count_norm(seed.norm());
    Payload p;
    p.results.push_back(json{{"seed", io::to_json(seed)},
                             {"norm", seed.norm()},
                             {"orbit_size", orbit.size()},
                             {"shell_size", shell}});
    p.csv = "seed,norm,orbit_size,shell_size\n" + csv_field(seed.to_string()) + "," + std::to_string(seed.norm()) +
            "," + std::to_string(orbit.size()) + "," + std::to_string(shell) + "\n";
    p.text = "orbit of " + seed.to_string() + ": " + std::to_string(orbit.size()) + " of " + std::to_string(shell) +
             " vectors of norm " + std::to_string(seed.norm()) + "\n";
    return p;
}

Payload e8_pairs(const std::string& w_spec, std::int64_t m, const Config& c) {
    const E8Vector w = parse_vector(w_spec);
    if (m < 1) throw UsageError("--m must be at least 1");
    require_norm(2 * m, c);
    const std::uint64_t n = e8::count_pair_decompositions(w, m);
    Payload p;
    p.results.push_back(json{{"w", io::to_json(w)}, {"m", m}, {"pairs", n}});
    p.csv = "w,m,pairs\n" + csv_field(w.to_string()) + "," + std::to_string(m) + "," + std::to_string(n) + "\n";
    p.text = "decompositions of " + w.to_string() + " with m=" + std::to_string(m) + ": " + std::to_string(n) + "\n";
    return p;
}

Payload e8_enumerate(std::int64_t norm, const Config& c) {
    require_norm(norm, c);
    Payload p;
    std::ostringstream csv, text;
    csv << "d1,d2,d3,d4,d5,d6,d7,d8\n";
    for (const auto& v : e8::enumerate_norm(norm)) {
        p.results.push_back(io::to_json(v));
        const auto& d = v.doubled();
        for (std::size_t i = 0; i < 8; ++i) csv << (i ? "," : "") << d[i];
        csv << '\n';
        text << v.to_string() << '\n';
    }
    p.csv = csv.str();
    p.text = text.str();
    return p;
}

/// One vector per line, written as it is found.
void e8_stream(std::int64_t norm, const Config& c, std::ostream& os) {
    require_norm(norm, c);
    if (c.format == "csv") os << "d1,d2,d3,d4,d5,d6,d7,d8\n";
    e8::stream_norm(norm, [&](const E8Vector& v) {
        if (c.format == "json") {
            os << io::to_json(v).dump() << '\n';
        } else if (c.format == "csv") {
            const auto& d = v.doubled();
            for (std::size_t i = 0; i < 8; ++i) os << (i ? "," : "") << d[i];
            os << '\n';
        } else {
            os << v.to_string() << '\n';
        }
    });
}

// ---------------------------------------------------------------- degrees

Payload cmd_degrees(std::int64_t g_max, const Config& c) {
    if (g_max < 0) throw UsageError("--g-max must be nonnegative");
    if (g_max + 2 > c.precision) {
        throw UsageError("--g-max " + std::to_string(g_max) + " needs --precision >= " + std::to_string(g_max + 2));
    }
    const auto rows = degree_table(g_max);
    Payload p;
    std::ostringstream text;
    text << "g  type         degree  simple  bound  genus_bound\n";
    for (const auto& r : rows) {
        p.results.push_back(io::to_json(r));
        text << r.g << "  " << to_string(r.type) << "  " << r.conjectural_degree.get_str() << "  "
             << r.simple_telltales.get_str() << "  " << r.rigorous_degree_bound.get_str() << "  "
             << r.genus_bound.get_str() << '\n';
    }
    p.csv = io::degree_table_csv(rows);
    p.text = text.str();
    return p;
}

// ---------------------------------------------------------------- verify

Payload reports_payload(const std::vector<CheckReport>& reports) {
    Payload p;
    std::ostringstream csv, text;
    csv << "name,precision,status,exponent,expected,got,detail\n";
    for (const auto& r : reports) {
        p.results.push_back(io::to_json(r));
        if (!r.passed()) p.code = verification_failure;
        csv << csv_field(r.name()) << ',' << r.precision() << ',' << (r.passed() ? "pass" : "fail") << ',';
        text << (r.passed() ? "PASS " : "FAIL ") << r.name() << " (precision " << r.precision() << ")";
        if (const auto& d = r.first_discrepancy()) {
            csv << d->exponent << ',' << d->expected.to_string() << ',' << d->got.to_string();
            text << ": first discrepancy at " << d->exponent << ", expected " << d->expected.to_string() << ", got "
                 << d->got.to_string();
        } else {
            csv << ",,";
        }
        csv << ',' << csv_field(r.detail()) << '\n';
        if (!r.detail().empty()) text << " - " << r.detail();
        text << '\n';
    }
    p.csv = csv.str();
    p.text = text.str();
    return p;
}

Payload cmd_verify(const std::string& suite, const Config& c) {
    if (suite != "all" && !checks::is_known(suite)) {
        std::string known;
        for (const auto& k : checks::names()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown check \"" + suite + "\" (known: all, " + known + ")");
    }
    if (c.precision < 8) throw UsageError("verify needs --precision >= 8");
    const checks::Limits limits{c.precision, c.norm_cap};
    return reports_payload(suite == "all" ? checks::run_all(limits) : checks::run(suite, limits));
}

// ---------------------------------------------------------------- golden values

struct Golden {
    std::string quantity;
    std::string source;
    BigInt expected;
    std::function<BigInt()> compute;
};

std::vector<Golden> golden_values() {
    auto coeff = [](std::function<QSeries(std::size_t)> f, std::size_t prec, std::size_t n) {
        return [f, prec, n] { return f(prec).coeff(n).to_integer(); };
    };
    auto e4 = [](std::size_t n) { return eisenstein(4, n); };
    auto e2 = [](std::size_t n) { return eisenstein(2, n); };
    auto e6 = [](std::size_t n) { return eisenstein(6, n); };
    auto big = [](std::int64_t v) { return BigInt(static_cast<long>(v)); };
    auto u64 = [](std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); };
    return {
        {"E2[1]", "Eisenstein normalization 1 - 24 sum sigma_1", big(-24), coeff(e2, 1, 1)},
        {"E4[1]", "Eisenstein normalization 1 + 240 sum sigma_3", big(240), coeff(e4, 2, 1)},
        {"E4[2]", "Eisenstein normalization 1 + 240 sum sigma_3", big(2160), coeff(e4, 2, 2)},
        {"E6[1]", "Eisenstein normalization 1 - 504 sum sigma_5", big(-504), coeff(e6, 1, 1)},
        {"theta[4]", "theta = 1 + 2 sum q^(n^2)", big(2), coeff(theta, 4, 4)},
        {"phi[0]", "Noether-Lefschetz series, constant term", big(-1), coeff(nl_series_phi, 3, 0)},
        {"phi[1]", "Noether-Lefschetz series, nodal surfaces", big(24), coeff(nl_series_phi, 3, 1)},
        {"phi[2]", "Noether-Lefschetz series expansion", big(73512), coeff(nl_series_phi, 3, 2)},
        {"phi[3]", "Noether-Lefschetz series expansion", big(3621216), coeff(nl_series_phi, 3, 3)},
        {"roots", "vectors of norm 2", big(240), [u64] { return u64(e8::count_norm(2)); }},
        {"norm4", "vectors of norm 4", big(2160), [u64] { return u64(e8::count_norm(4)); }},
        {"root_orbit", "reflection orbit of a root", big(240),
         [u64] { return u64(e8::orbit(e8::roots().front(), e8::roots()).size()); }},
        {"norm4_orbit", "reflection orbit of (2,0^7)", big(2160),
         [u64] { return u64(e8::orbit(parse_vector("norm4"), e8::roots()).size()); }},
        {"classes_root_type", "E8/2E8 classes with a root representative", big(120),
         [big] { return big(e8::classify_classes().root_type); }},
        {"classes_norm4_type", "E8/2E8 classes with norm-4 representatives", big(135),
         [big] { return big(e8::classify_classes().norm4_type); }},
        {"bisections(g=1,n=1)", "lattice vectors counted by the q^3 coefficient of E4", big(6720),
         [u64] { return u64(e8::count_bisection_classes(1, 1, e8::BundleKind::all)); }},
        {"delta(g=3,ordinary)", "height defect rule", big(0),
         [big] { return big(e8::min_height_delta(3, e8::BundleKind::ordinary).delta); }},
        {"delta(g=4,weierstrass)", "height defect rule", big(1),
         [big] { return big(e8::min_height_delta(4, e8::BundleKind::weierstrass).delta); }},
        {"degree(g=0,ordinary)", "rational quartic curve", big(4),
         [] { return conjectural_degree(0, BundleType::ordinary); }},
        {"multiplicity(1,simple)", "2 sigma_1(m)", big(2), [] { return multiplicity(1, false); }},
        {"multiplicity(4,doubled)", "sigma_1(m) - 1 for square m", big(6), [] { return multiplicity(4, true); }},
        {"multiplicity(2,doubled)", "sigma_1(m) for non-square m", big(3), [] { return multiplicity(2, true); }},
    };
}

Payload cmd_seed_table() {
    Payload p;
    std::ostringstream csv, text;
    csv << "quantity,expected,computed,status,source\n";
    for (const auto& g : golden_values()) {
        const BigInt got = g.compute();
        const bool ok = got == g.expected;
        if (!ok) p.code = verification_failure;
        p.results.push_back(json{{"quantity", g.quantity},
                                 {"expected", g.expected.get_str()},
                                 {"computed", got.get_str()},
                                 {"status", ok ? "pass" : "fail"},
                                 {"source", g.source}});
        csv << csv_field(g.quantity) << ',' << g.expected.get_str() << ',' << got.get_str() << ','
            << (ok ? "pass" : "fail") << ',' << csv_field(g.source) << '\n';
        text << (ok ? "PASS " : "FAIL ") << g.quantity << " = " << got.get_str() << " (expected "
             << g.expected.get_str() << "; " << g.source << ")\n";
    }
    p.csv = csv.str();
    p.text = text.str();
    return p;
}

// ---------------------------------------------------------------- output

std::string render(const Payload& p, const Config& c) {
    if (c.format == "csv") return p.csv;
    if (c.format == "text") return p.text;
    json doc{{"tool_version", kToolVersion}, {"config", config_json(c)}, {"results", p.results}};
    return doc.dump(2) + "\n";
}

class Sink {
public:
    Sink(const Config& c, std::ostream& fallback) : stream_(&fallback) {
        if (!c.out_path.empty()) {
            file_.open(c.out_path, std::ios::out | std::ios::trunc);
            if (!file_) throw UsageError("cannot open --out path " + c.out_path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact q-series and E8 lattice computations for bisection Severi degrees", "severi"};
    app.require_subcommand(0, 1);
    app.add_option("--precision", c.precision, "Series precision N (coefficients q^0..q^N)");
    app.add_option("--norm-cap", c.norm_cap, "Largest lattice norm that may be enumerated (even)");
    app.add_option("--threads", c.threads, "Worker threads: k or auto");
    app.add_option("--format", c.format, "Output format: json, csv or text");
    app.add_option("--out", c.out_path, "Write results to PATH instead of stdout");
    app.add_flag("--seed-table", c.seed_table, "Recompute and list the golden reference values");

    std::string series_name;
    auto* series = app.add_subcommand("series", "Emit a q-series");
    series->add_option("name", series_name, "E2, E4, E6, theta, E4inf, phi, psi_ex, psi_no, psi_sec, deg_ord, deg_wei")
        ->required();

    auto* e8cmd = app.add_subcommand("e8", "Lattice queries");
    e8cmd->require_subcommand(1);
    std::int64_t norm = 0;
    std::int64_t m = 0;
    std::string vec_spec;
    bool stream = false;
    auto* count = e8cmd->add_subcommand("count", "Number of vectors of a given norm");
    count->add_option("--norm", norm)->required();
    auto* classes = e8cmd->add_subcommand("classes", "Parity split of E8/2E8");
    auto* orbit = e8cmd->add_subcommand("orbit", "Reflection orbit size of a vector");
    orbit->add_option("--seed", vec_spec, "root, norm4, zero or 8 comma-separated doubled coordinates")->required();
    auto* pairs = e8cmd->add_subcommand("pairs", "Count decompositions w = u1 + u2 with 4 u1.u2 = w^2 - 2m");
    pairs->add_option("--w", vec_spec, "root, norm4, zero or 8 comma-separated doubled coordinates")->required();
    pairs->add_option("--m", m)->required();
    auto* enumerate = e8cmd->add_subcommand("enumerate", "List the vectors of a given norm in canonical order");
    enumerate->add_option("--norm", norm)->required();
    enumerate->add_flag("--stream", stream, "Write one vector per line as it is found");

    std::int64_t g_max = 10;
    auto* degrees = app.add_subcommand("degrees", "Degree table by genus and bundle type");
    degrees->add_option("--g-max", g_max, "Largest genus");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("suite", suite, "all or a check name")->required();

    for (auto* sub : {series, e8cmd, degrees, verify}) sub->fallthrough();
    for (auto* sub : {count, classes, orbit, pairs, enumerate}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        validate(c);
        apply_threads(c.threads);
        if (!c.seed_table && app.get_subcommands().empty()) throw UsageError("expected a command; see --help");

        Sink sink(c, out);
        if (enumerate->parsed() && stream) {
            e8_stream(norm, c, sink.get());
            return success;
        }

        Payload p;
        if (c.seed_table) {
            p = cmd_seed_table();
        } else if (series->parsed()) {
            p = cmd_series(series_name, c);
        } else if (count->parsed()) {
            p = e8_count(norm, c);
        } else if (classes->parsed()) {
            p = e8_classes();
        } else if (orbit->parsed()) {
            p = e8_orbit(vec_spec, c);
        } else if (pairs->parsed()) {
            p = e8_pairs(vec_spec, m, c);
        } else if (enumerate->parsed()) {
            p = e8_enumerate(norm, c);
        } else if (degrees->parsed()) {
            p = cmd_degrees(g_max, c);
        } else {
            p = cmd_verify(suite, c);
        }
        sink.get() << render(p, c);
        return p.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal check failed: " << e.what() << "\n";
        return verification_failure;
    }
}

}  // namespace severi::cli
