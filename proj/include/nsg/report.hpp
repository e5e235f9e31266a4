#pragma once

// Serialization of reports (JSON, CSV, plain table) and the parallel
// parameter sweep behind `nsg verify`.
//
// JSON report keys, in emission order:
//   family, e, q, d, m, generators, frobenius_closed, frobenius_computed,
//   genus, symmetric, mu, mu_predicted, checks
// `checks` is an object keyed by check name in the order of nsg::check_names.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "nsg/constructions.hpp"

namespace nsg {

using json = nlohmann::ordered_json;

enum class Format { json, csv, table };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    return std::nullopt;
}

/// Serialized JSON text: two-space indent, newline-terminated.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json to_json(const FamilyReport& r) {
    const auto [e, q, d, m] = std::visit([](const auto& p) { return std::array{p.e, p.q, p.d, p.m}; }, r.params);
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    json j;
    j["family"] = to_string(family_of(r.params));
    j["e"] = e;
    j["q"] = q;
    j["d"] = d;
    j["m"] = m;
    j["generators"] = r.generators;
    j["frobenius_closed"] = r.frobenius_closed;
    j["frobenius_computed"] = r.frobenius_computed;
    j["genus"] = r.genus;
    j["symmetric"] = r.symmetric;
    j["mu"] = r.presentation_cardinality;
    j["mu_predicted"] = r.presentation_predicted;
    j["checks"] = std::move(checks);
    return j;
}

template <class Range>
std::string join(const Range& values, char sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

inline std::string csv_header() {
    return "family,e,q,d,m,generators,frobenius_closed,frobenius_computed,genus,symmetric,mu,mu_predicted,checks\n";
}

/// One CSV row; generators and checks are semicolon-joined ("name=true").
inline std::string csv_row(const FamilyReport& r) {
    const json j = to_json(r);
    std::vector<std::string> checks;
    for (const auto& [name, ok] : r.checks) checks.push_back(name + "=" + (ok ? "true" : "false"));
    std::ostringstream os;
    os << j["family"].get<std::string>() << ',' << j["e"] << ',' << j["q"] << ',' << j["d"] << ',' << j["m"] << ','
       << join(r.generators, ';') << ',' << r.frobenius_closed << ',' << r.frobenius_computed << ',' << r.genus
       << ',' << (r.symmetric ? "true" : "false") << ',' << r.presentation_cardinality << ','
       << r.presentation_predicted << ',' << join(checks, ';') << '\n';
    return os.str();
}

inline std::string table_text(const FamilyReport& r) {
    const json j = to_json(r);
    std::ostringstream os;
    os << "family " << j["family"].get<std::string>() << "  (e, q, d) = (" << j["e"] << ", " << j["q"] << ", "
       << j["d"] << ")  m = " << j["m"] << '\n'
       << "  generators            " << join(r.generators, ' ') << '\n'
       << "  frobenius (closed)    " << r.frobenius_closed << '\n'
       << "  frobenius (computed)  " << r.frobenius_computed << '\n'
       << "  genus                 " << r.genus << '\n'
       << "  symmetric             " << (r.symmetric ? "yes" : "no") << '\n'
       << "  mu / predicted        " << r.presentation_cardinality << " / " << r.presentation_predicted << '\n';
    for (const auto& [name, ok] : r.checks) os << "  [" << (ok ? "pass" : "FAIL") << "] " << name << '\n';
    return os.str();
}

// --- sweeps -----------------------------------------------------------------

struct IntRange {
    value_t lo = 0, hi = 0;
    bool operator==(const IntRange&) const = default;
};

/// Parses "7" or "4..8". Returns nullopt on malformed or empty ranges.
inline std::optional<IntRange> parse_range(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<value_t> {
        value_t v{};
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) return std::nullopt;
        return v;
    };
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_int(s);
        if (!v) return std::nullopt;
        return IntRange{*v, *v};
    }
    const auto lo = parse_int(s.substr(0, dots));
    const auto hi = parse_int(s.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return IntRange{*lo, *hi};
}

struct SweepConfig {
    std::vector<Family> families{Family::S, Family::T};
    IntRange e_range{4, 4}, q_range{1, 1}, d_range{1, 1};
    unsigned parallelism = 1;
};

struct SweepFailure {
    Family family;
    value_t e, q, d;
    std::string check;
};

struct SweepResult {
    std::vector<FamilyReport> reports; // ordered by (family, e, q, d)
    std::size_t skipped = 0;
    std::map<std::string, std::size_t> skip_reasons;
    std::size_t failures = 0;
    std::optional<SweepFailure> first_failure;
};

/// Runs verify_instance over the grid. Invalid triples are counted, not errors.
inline SweepResult run_sweep(const SweepConfig& cfg) {
    SweepResult out;
    std::vector<Params> grid;
    for (Family f : cfg.families)
        for (value_t e = cfg.e_range.lo; e <= cfg.e_range.hi; ++e)
            for (value_t q = cfg.q_range.lo; q <= cfg.q_range.hi; ++q)
                for (value_t d = cfg.d_range.lo; d <= cfg.d_range.hi; ++d) {
                    try {
                        grid.push_back(make_params(f, e, q, d));
                    } catch (const invalid_params& ex) {
                        ++out.skipped;
                        ++out.skip_reasons[ex.constraint()];
                    }
                }

    std::vector<std::optional<FamilyReport>> slots(grid.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(grid.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                slots[i] = verify_instance(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.parallelism, static_cast<unsigned>(grid.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }

    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    for (auto& slot : slots) {
        FamilyReport& r = *slot;
        if (!r.passed()) {
            ++out.failures;
            if (!out.first_failure) {
                const auto [e, q, d] = std::visit([](const auto& p) { return std::array{p.e, p.q, p.d}; }, r.params);
                out.first_failure = SweepFailure{family_of(r.params), e, q, d, r.first_failure()};
            }
        }
        out.reports.push_back(std::move(r));
    }
    return out;
}

inline json summary_json(const SweepResult& r) {
    json j;
    j["instances"] = r.reports.size();
    j["skipped"] = r.skipped;
    j["failures"] = r.failures;
    json reasons = json::object();
    for (const auto& [name, count] : r.skip_reasons) reasons[name] = count;
    j["skip_reasons"] = std::move(reasons);
    if (r.first_failure) {
        const auto& f = *r.first_failure;
        j["first_failure"] = json{{"family", to_string(f.family)}, {"e", f.e}, {"q", f.q}, {"d", f.d}, {"check", f.check}};
    }
    return j;
}

inline json to_json(const SweepResult& r) {
    json j;
    j["summary"] = summary_json(r);
    json reports = json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    j["reports"] = std::move(reports);
    return j;
}

// --- presentations, Apery sets, gaps ------------------------------------------

inline json to_json(const Factorization& f) { return f.exponents; }

inline std::string to_text(const Factorization& f) { return "(" + join(f.exponents, ',') + ")"; }

inline json presentation_json(const NumericalSemigroup& s, const Presentation& p) {
    json j;
    j["generators"] = std::vector<value_t>(s.generators().begin(), s.generators().end());
    j["mu"] = p.cardinality();
    json betti = json::array();
    for (const auto& b : p.betti) betti.push_back(json{{"element", b.element}, {"components", b.components}});
    j["betti"] = std::move(betti);
    json rel = json::array();
    for (const auto& [lhs, rhs] : p.relations) rel.push_back(json::array({to_json(lhs), to_json(rhs)}));
    j["relations"] = std::move(rel);
    return j;
}

inline json apery_json(const NumericalSemigroup& s, const AperySet& ap) {
    json j;
    j["generators"] = std::vector<value_t>(s.generators().begin(), s.generators().end());
    j["base"] = ap.base();
    j["apery"] = ap.sorted();
    return j;
}

inline json gaps_json(const NumericalSemigroup& s, const GapProfile& g) {
    json j;
    j["generators"] = std::vector<value_t>(s.generators().begin(), s.generators().end());
    j["frobenius"] = g.frobenius;
    j["genus"] = g.genus;
    j["symmetric"] = is_symmetric(s);
    j["gaps"] = g.gaps;
    return j;
}

} // namespace nsg
