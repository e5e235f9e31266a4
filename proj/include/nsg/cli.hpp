#pragma once

// The `nsg` command line. `run` is the whole program minus process plumbing so
// it can be driven from tests.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nsg/report.hpp"

namespace nsg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// NSG_JOBS if set to a positive integer, else the hardware concurrency.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("NSG_JOBS")) {
        if (const auto r = parse_range(env); r && r->lo == r->hi && r->lo > 0) return static_cast<unsigned>(r->lo);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<Family> parse_families(const std::string& s, bool allow_both) {
    if (s == "s" || s == "S") return {Family::S};
    if (s == "t" || s == "T") return {Family::T};
    if (allow_both && s == "both") return {Family::S, Family::T};
    throw usage_error("--family must be " + std::string(allow_both ? "s, t or both" : "s or t") + ", got '" + s + "'");
}

inline IntRange range_flag(const std::string& name, const std::string& text) {
    const auto r = parse_range(text);
    if (!r) throw usage_error("--" + name + " expects an integer or lo..hi, got '" + text + "'");
    return *r;
}

inline value_t single_flag(const std::string& name, const std::string& text) {
    const auto r = range_flag(name, text);
    if (r.lo != r.hi) throw usage_error("--" + name + " expects a single integer here, got '" + text + "'");
    return r.lo;
}

inline std::vector<value_t> parse_gens(const std::string& text) {
    std::vector<value_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(single_flag("gens", item));
    if (out.empty()) throw usage_error("--gens expects a comma-separated list");
    return out;
}

struct Options {
    std::string family = "s";
    std::string e = "4", q = "1", d = "1";
    std::string gens;
    std::string format = "json";
    std::string out_file;
    value_t base = 0;
    unsigned jobs = 0;
};

// Either --gens or a family instance.
inline NumericalSemigroup resolve_semigroup(const Options& o) {
    if (!o.gens.empty()) return NumericalSemigroup::from_generators(parse_gens(o.gens));
    const Family f = parse_families(o.family, false).front();
    return build(make_params(f, single_flag("e", o.e), single_flag("q", o.q), single_flag("d", o.d)));
}

inline Format resolve_format(const Options& o) {
    const auto f = parse_format(o.format);
    if (!f) throw usage_error("--format must be json, csv or table, got '" + o.format + "'");
    return *f;
}

} // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;
    o.jobs = default_jobs();

    CLI::App app{"Symmetric numerical semigroup families: construction and verification"};
    app.name("nsg");
    app.require_subcommand(1);

    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "s, t (or both for verify)")->capture_default_str();
        sub->add_option("--e", o.e, "embedding dimension (single or lo..hi)")->capture_default_str();
        sub->add_option("--q", o.q, "q (single or lo..hi)")->capture_default_str();
        sub->add_option("--d", o.d, "common difference d (single or lo..hi)")->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, csv or table")->capture_default_str();
        sub->add_option("--out", o.out_file, "write output to FILE instead of stdout");
    };

    auto* construct = app.add_subcommand("construct", "build one family instance and report on it");
    add_instance(construct);
    add_output(construct);

    auto* verify = app.add_subcommand("verify", "run every check over a parameter grid");
    add_instance(verify);
    add_output(verify);
    verify->add_option("--jobs", o.jobs, "worker threads (default: $NSG_JOBS or hardware threads)");

    auto* presentation = app.add_subcommand("presentation", "minimal presentation of <gens>");
    presentation->add_option("--gens", o.gens, "comma-separated generators")->required();
    add_output(presentation);

    auto* apery = app.add_subcommand("apery", "Apery set of <gens> or a family instance");
    apery->add_option("--gens", o.gens, "comma-separated generators");
    add_instance(apery);
    apery->add_option("--base", o.base, "nonzero element to take the Apery set against (default: multiplicity)");
    add_output(apery);

    auto* gaps = app.add_subcommand("gaps", "gaps, Frobenius number and genus");
    gaps->add_option("--gens", o.gens, "comma-separated generators");
    add_instance(gaps);
    add_output(gaps);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "nsg: " << e.what() << '\n';
        return exit_usage;
    }

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        const Format format = detail::resolve_format(o);
        if (construct->parsed()) {
            const Family f = detail::parse_families(o.family, false).front();
            const auto report = verify_instance(
                make_params(f, detail::single_flag("e", o.e), detail::single_flag("q", o.q), detail::single_flag("d", o.d)));
            if (format == Format::json)
                buffer << dump(to_json(report));
            else if (format == Format::csv)
                buffer << csv_header() << csv_row(report);
            else
                buffer << table_text(report);
        } else if (verify->parsed()) {
            SweepConfig cfg;
            cfg.families = detail::parse_families(o.family, true);
            cfg.e_range = detail::range_flag("e", o.e);
            cfg.q_range = detail::range_flag("q", o.q);
            cfg.d_range = detail::range_flag("d", o.d);
            cfg.parallelism = std::max(1u, o.jobs);
            const SweepResult result = run_sweep(cfg);
            if (format == Format::json) {
                buffer << dump(to_json(result));
            } else if (format == Format::csv) {
                buffer << csv_header();
                for (const auto& r : result.reports) buffer << csv_row(r);
            } else {
                for (const auto& r : result.reports) buffer << table_text(r);
                buffer << "instances " << result.reports.size() << ", skipped " << result.skipped << ", failures "
                       << result.failures << '\n';
            }
            if (result.first_failure) {
                const auto& f = *result.first_failure;
                err << "nsg: verification failed: family " << to_string(f.family) << " e=" << f.e << " q=" << f.q
                    << " d=" << f.d << " check=" << f.check << '\n';
                code = exit_failed;
            }
        } else if (presentation->parsed()) {
            const auto s = NumericalSemigroup::from_generators(detail::parse_gens(o.gens));
            const Presentation p = minimal_presentation(s);
            if (format == Format::json) {
                buffer << dump(presentation_json(s, p));
            } else if (format == Format::csv) {
                buffer << "lhs,rhs\n";
                for (const auto& [lhs, rhs] : p.relations)
                    buffer << join(lhs.exponents, ';') << ',' << join(rhs.exponents, ';') << '\n';
            } else {
                buffer << "generators " << join(s.generators(), ' ') << '\n';
                for (const auto& b : p.betti) buffer << "betti " << b.element << " components " << b.components << '\n';
                for (const auto& [lhs, rhs] : p.relations) buffer << "(" << to_text(lhs) << "," << to_text(rhs) << ")\n";
                buffer << "mu " << p.cardinality() << '\n';
            }
        } else if (apery->parsed()) {
            const auto s = detail::resolve_semigroup(o);
            const AperySet ap = apery_set(s, o.base == 0 ? s.multiplicity() : o.base);
            if (format == Format::json) {
                buffer << dump(apery_json(s, ap));
            } else if (format == Format::csv) {
                buffer << "residue,element\n";
                for (value_t r = 0; r < ap.base(); ++r) buffer << r << ',' << ap[r] << '\n';
            } else {
                buffer << "Ap(<" << join(s.generators(), ',') << ">, " << ap.base() << ") = {" << join(ap.sorted(), ',')
                       << "}\n";
            }
        } else if (gaps->parsed()) {
            const auto s = detail::resolve_semigroup(o);
            const GapProfile g = gap_profile(s);
            if (format == Format::json) {
                buffer << dump(gaps_json(s, g));
            } else if (format == Format::csv) {
                buffer << "generators,frobenius,genus,symmetric,gaps\n"
                       << join(s.generators(), ';') << ',' << g.frobenius << ',' << g.genus << ','
                       << (is_symmetric(s) ? "true" : "false") << ',' << join(g.gaps, ';') << '\n';
            } else {
                buffer << "frobenius " << g.frobenius << "\ngenus " << g.genus << "\nsymmetric "
                       << (is_symmetric(s) ? "yes" : "no") << "\ngaps " << join(g.gaps, ' ') << '\n';
            }
        }
    } catch (const invalid_params& e) {
        err << "nsg: " << e.constraint() << '\n';
        return exit_usage;
    } catch (const detail::usage_error& e) {
        err << "nsg: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "nsg: " << e.what() << '\n';
        return exit_usage;
    }

    if (o.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) {
            err << "nsg: cannot open " << o.out_file << '\n';
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace nsg::cli
