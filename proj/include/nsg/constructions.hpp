#pragma once

// The two symmetric families generated by m, m+d followed by an arithmetic
// sequence of step d:
//
//   S(e,q,d): m = e+2q+1, gens m, m+d, (q+1)m+(q+i)d            for 2 <= i <= e-1
//   T(e,q,d): m = e+2q,   gens m, m+d, q(m+1)+(q-(e-4)/2+i)d+e/2 for 0 <= i <= e-3
//
// with closed forms for their Apery sets w.r.t. m, Frobenius numbers and the
// size e(e-1)/2 - 1 of a minimal presentation.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nsg/oracle.hpp"
#include "nsg/presentations.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class Family { S, T };

inline const char* to_string(Family f) { return f == Family::S ? "S" : "T"; }

struct ParamsS {
    value_t e = 0, q = 0, d = 0, m = 0;

    /// Validates in the order e, q, d, gcd(m, d).
    static ParamsS make(value_t e, value_t q, value_t d) {
        if (e < 4) throw invalid_params("e must be >= 4");
        if (q < 1) throw invalid_params("q must be >= 1");
        if (d < 1) throw invalid_params("d must be >= 1");
        const value_t m = add(add(e, mul(2, q)), 1);
        if (std::gcd(m, d) != 1) throw invalid_params("gcd(m, d) must be 1");
        return ParamsS{e, q, d, m};
    }

    bool operator==(const ParamsS&) const = default;
};

struct ParamsT {
    value_t e = 0, q = 0, d = 0, m = 0;

    /// Validates in the order e (bound, parity), q (parity, bounds), d (bound, parity), gcd(m, d).
    static ParamsT make(value_t e, value_t q, value_t d) {
        if (e < 4) throw invalid_params("e must be >= 4");
        if (e % 2 != 0) throw invalid_params("e must be even");
        if (q % 2 != 0) throw invalid_params("q must be even");
        if (q < 2) throw invalid_params("q must be >= 2");
        if (q < e - 4) throw invalid_params("q must be >= e - 4");
        if (d < 1) throw invalid_params("d must be >= 1");
        if (d % 2 == 0) throw invalid_params("d must be odd");
        const value_t m = add(e, mul(2, q));
        if (std::gcd(m, d) != 1) throw invalid_params("gcd(m, d) must be 1");
        return ParamsT{e, q, d, m};
    }

    // First term of the long arithmetic block: q(m+1) + (q-(e-4)/2)d + e/2.
    value_t block_start() const { return add(add(mul(q, m + 1), mul(q - (e - 4) / 2, d)), e / 2); }

    bool operator==(const ParamsT&) const = default;
};

using Params = std::variant<ParamsS, ParamsT>;

inline Params make_params(Family family, value_t e, value_t q, value_t d) {
    if (family == Family::S) return ParamsS::make(e, q, d);
    return ParamsT::make(e, q, d);
}

inline Family family_of(const Params& p) { return std::holds_alternative<ParamsS>(p) ? Family::S : Family::T; }

inline std::vector<value_t> generators_S(const ParamsS& p) {
    std::vector<value_t> gens{p.m, add(p.m, p.d)};
    for (value_t i = 2; i <= p.e - 1; ++i) gens.push_back(add(mul(p.q + 1, p.m), mul(p.q + i, p.d)));
    return gens;
}

inline std::vector<value_t> generators_T(const ParamsT& p) {
    std::vector<value_t> gens{p.m, add(p.m, p.d)};
    for (value_t i = 0; i <= p.e - 3; ++i) gens.push_back(add(p.block_start(), mul(i, p.d)));
    return gens;
}

inline std::vector<value_t> generators_of(const Params& p) {
    return std::visit(
        [](const auto& params) {
            if constexpr (std::is_same_v<std::decay_t<decltype(params)>, ParamsS>)
                return generators_S(params);
            else
                return generators_T(params);
        },
        p);
}

inline NumericalSemigroup build_S(value_t e, value_t q, value_t d) {
    return NumericalSemigroup::from_generators(generators_S(ParamsS::make(e, q, d)));
}

inline NumericalSemigroup build_T(value_t e, value_t q, value_t d) {
    return NumericalSemigroup::from_generators(generators_T(ParamsT::make(e, q, d)));
}

inline NumericalSemigroup build(const Params& p) { return NumericalSemigroup::from_generators(generators_of(p)); }

/// Minimality: the defining list is exactly the reduced generating system.
inline bool check_minimality(const Params& p) {
    const auto raw = generators_of(p);
    const auto reduced = NumericalSemigroup::from_generators(raw);
    const auto gens = reduced.generators();
    return static_cast<value_t>(raw.size()) == std::visit([](const auto& x) { return x.e; }, p) &&
           std::equal(raw.begin(), raw.end(), gens.begin(), gens.end());
}

struct AperyPiecesS {
    std::vector<value_t> beta1; // k(m+d),                        0 <= k <= q+1
    std::vector<value_t> beta2; // k(m+d) + (q+1)m + (q+e-1)d,    0 <= k <= q+1
    std::vector<value_t> beta3; // (q+1)m + (q+i)d,               2 <= i <= e-2
};

struct AperyPiecesT {
    std::vector<value_t> gamma1; // q(m+1) + (q-(e-4)/2+k)d + e/2, 0 <= k <= e-3
    std::vector<value_t> gamma2; // k(m+d),                        0 <= k <= 2q+1
};

inline AperyPiecesS apery_pieces_S(const ParamsS& p) {
    AperyPiecesS out;
    const value_t step = add(p.m, p.d);
    const value_t top = add(mul(p.q + 1, p.m), mul(p.q + p.e - 1, p.d));
    for (value_t k = 0; k <= p.q + 1; ++k) {
        out.beta1.push_back(mul(k, step));
        out.beta2.push_back(add(mul(k, step), top));
    }
    for (value_t i = 2; i <= p.e - 2; ++i) out.beta3.push_back(add(mul(p.q + 1, p.m), mul(p.q + i, p.d)));
    return out;
}

inline AperyPiecesT apery_pieces_T(const ParamsT& p) {
    AperyPiecesT out;
    for (value_t k = 0; k <= p.e - 3; ++k) out.gamma1.push_back(add(p.block_start(), mul(k, p.d)));
    const value_t step = add(p.m, p.d);
    for (value_t k = 0; k <= 2 * p.q + 1; ++k) out.gamma2.push_back(mul(k, step));
    return out;
}

/// beta1 + beta2 + beta3 indexed by residue mod m. Throws if the pieces overlap
/// or miss a residue class.
inline AperySet apery_closed_form_S(const ParamsS& p) {
    const auto pieces = apery_pieces_S(p);
    std::vector<value_t> all = pieces.beta1;
    all.insert(all.end(), pieces.beta2.begin(), pieces.beta2.end());
    all.insert(all.end(), pieces.beta3.begin(), pieces.beta3.end());
    return AperySet::from_values(p.m, all);
}

inline AperySet apery_closed_form_T(const ParamsT& p) {
    const auto pieces = apery_pieces_T(p);
    std::vector<value_t> all = pieces.gamma1;
    all.insert(all.end(), pieces.gamma2.begin(), pieces.gamma2.end());
    return AperySet::from_values(p.m, all);
}

inline AperySet apery_closed_form(const Params& p) {
    if (const auto* s = std::get_if<ParamsS>(&p)) return apery_closed_form_S(*s);
    return apery_closed_form_T(std::get<ParamsT>(p));
}

/// 4q^2 + (2e+2d+4)q + e(d+1) + 1
inline value_t frobenius_closed_form_S(const ParamsS& p) {
    const value_t quad = mul(4, mul(p.q, p.q));
    const value_t lin = mul(add(add(mul(2, p.e), mul(2, p.d)), 4), p.q);
    return add(add(add(quad, lin), mul(p.e, p.d + 1)), 1);
}

/// (e+2q+d) 2q + d
inline value_t frobenius_closed_form_T(const ParamsT& p) {
    return add(mul(add(add(p.e, mul(2, p.q)), p.d), mul(2, p.q)), p.d);
}

inline value_t frobenius_closed_form(const Params& p) {
    if (const auto* s = std::get_if<ParamsS>(&p)) return frobenius_closed_form_S(*s);
    return frobenius_closed_form_T(std::get<ParamsT>(p));
}

inline value_t predicted_presentation_size(value_t e) {
    if (e < 4) throw invalid_params("e must be >= 4");
    return sub(mul(e, e - 1) / 2, 1);
}

/// Every Apery element (w.r.t. m) below the maximum has exactly one
/// factorization; the maximum has at least two.
inline bool check_unique_expression(const NumericalSemigroup& s) {
    const auto ap = s.apery().sorted();
    for (std::size_t i = 0; i + 1 < ap.size(); ++i)
        if (factorizations(s, ap[i]).size() != 1) return false;
    return factorizations(s, ap.back()).size() >= 2;
}

namespace detail {

// No nonzero alpha in Ap(S, m) with alpha + n = target, for each n and target.
inline bool no_apery_sum(const NumericalSemigroup& s, std::span<const value_t> summands,
                         std::span<const value_t> targets) {
    const AperySet& ap = s.apery();
    for (value_t n : summands)
        for (value_t target : targets) {
            const value_t alpha = target - n;
            if (alpha <= 0) continue;
            if (ap[alpha % ap.base()] == alpha) return false;
        }
    return true;
}

} // namespace detail

/// n_i = (q+1)m + (q+i)d (2 <= i <= e-2) never completes to
/// k(m+d) + (q+1)m + (q+e-1)d (1 <= k <= q) with a nonzero Apery element.
inline bool check_notsum(const ParamsS& p) {
    const auto s = build(p);
    const auto pieces = apery_pieces_S(p);
    const std::vector<value_t> targets(pieces.beta2.begin() + 1, pieces.beta2.end() - 1);
    return detail::no_apery_sum(s, pieces.beta3, targets);
}

/// n_i = q(m+1) + (q-(e-4)/2+i)d + e/2 (0 <= i <= e-3) never completes to
/// k(m+d) (2 <= k <= 2q) with a nonzero Apery element.
inline bool check_notsum(const ParamsT& p) {
    const auto s = build(p);
    const auto pieces = apery_pieces_T(p);
    const std::vector<value_t> targets(pieces.gamma2.begin() + 2, pieces.gamma2.end() - 1);
    return detail::no_apery_sum(s, pieces.gamma1, targets);
}

inline bool check_notsum(const Params& p) {
    return std::visit([](const auto& x) { return check_notsum(x); }, p);
}

/// Outcome of every family check for one parameter triple.
struct FamilyReport {
    Params params;
    std::vector<value_t> generators;
    value_t frobenius_closed = 0;
    value_t frobenius_computed = 0;
    value_t genus = 0;
    bool symmetric = false;
    value_t presentation_cardinality = 0;
    value_t presentation_predicted = 0;
    std::vector<std::pair<std::string, bool>> checks; // fixed order, see check_names

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
    }

    /// Name of the first failing check, or empty.
    std::string first_failure() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return name;
        return {};
    }
};

inline constexpr std::array<const char*, 7> check_names{
    "minimality", "apery_match", "frobenius_match", "symmetry", "mu_match", "unique_expression", "notsum"};

inline FamilyReport verify_instance(const Params& p) {
    FamilyReport r;
    r.params = p;
    const value_t e = std::visit([](const auto& x) { return x.e; }, p);
    const auto s = build(p);
    r.generators.assign(s.generators().begin(), s.generators().end());

    const bool minimal = check_minimality(p);

    bool apery_ok = false;
    try {
        const AperySet closed = apery_closed_form(p);
        apery_ok = closed == s.apery() && closed == apery_set(s, s.multiplicity()) &&
                   closed == oracle::brute_apery(s, s.multiplicity());
    } catch (const error&) {
        apery_ok = false;
    }

    r.frobenius_closed = frobenius_closed_form(p);
    r.frobenius_computed = frobenius(s);
    const bool frobenius_ok =
        r.frobenius_closed == r.frobenius_computed && r.frobenius_closed == oracle::brute_frobenius(s);

    r.genus = genus_from_apery(s);
    r.symmetric = is_symmetric(s);
    const bool symmetry_ok = r.symmetric && oracle::brute_symmetric(s) && 2 * r.genus == r.frobenius_computed + 1;

    r.presentation_cardinality = static_cast<value_t>(presentation_cardinality(s));
    r.presentation_predicted = predicted_presentation_size(e);

    const bool unique_ok = check_unique_expression(s);
    const bool notsum_ok = check_notsum(p);

    r.checks = {{check_names[0], minimal},
                {check_names[1], apery_ok},
                {check_names[2], frobenius_ok},
                {check_names[3], symmetry_ok},
                {check_names[4], r.presentation_cardinality == r.presentation_predicted},
                {check_names[5], unique_ok},
                {check_names[6], notsum_ok}};
    return r;
}

inline FamilyReport verify_instance(Family family, value_t e, value_t q, value_t d) {
    return verify_instance(make_params(family, e, q, d));
}

} // namespace nsg
