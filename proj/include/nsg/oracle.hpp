#pragma once

// Brute-force reference implementations. These use a forward membership sieve
// and share no code path with the residue-table algorithms in semigroup.hpp.

#include <cstdint>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg::oracle {

struct MembershipSieve {
    value_t bound = 0;
    std::vector<bool> table; // table[n] iff n in S, 0 <= n <= bound

    bool operator()(value_t n) const { return n >= 0 && n <= bound && table[n]; }
};

inline MembershipSieve sieve(const NumericalSemigroup& s, value_t bound) {
    MembershipSieve out{bound, std::vector<bool>(static_cast<std::size_t>(bound) + 1, false)};
    out.table[0] = true;
    for (value_t n = 1; n <= bound; ++n)
        for (value_t g : s.generators())
            if (g <= n && out.table[n - g]) {
                out.table[n] = true;
                break;
            }
    return out;
}

/// Sieve bound n0 * n_max. Schur: F <= (n0 - 1)(n_max - 1) - 1 for any
/// coprime system. n0 * n1 alone is not enough once gcd(n0, n1) > 1,
/// e.g. F(<4,6,35>) = 37 > 24.
inline value_t default_bound(const NumericalSemigroup& s) {
    const auto gens = s.generators();
    return mul(gens.front(), gens.back());
}

inline value_t brute_frobenius(const NumericalSemigroup& s) {
    const auto table = sieve(s, default_bound(s));
    for (value_t n = table.bound; n >= 0; --n)
        if (!table.table[n]) return n;
    return -1;
}

/// Scans 0 .. F + a for elements n with n in S and n - a not in S.
inline AperySet brute_apery(const NumericalSemigroup& s, value_t a) {
    const auto first = sieve(s, std::max(a, value_t{0}));
    if (a <= 0 || !first(a)) throw not_member(a);
    const value_t f = brute_frobenius(s);
    const value_t bound = add(f, a);
    const auto table = sieve(s, bound);
    std::vector<value_t> found;
    for (value_t n = 0; n <= bound; ++n)
        if (table(n) && !table(n - a)) found.push_back(n);
    return AperySet::from_values(a, found);
}

/// Mirror criterion: for every 0 <= x <= F exactly one of x, F - x lies in S.
inline bool brute_symmetric(const NumericalSemigroup& s) {
    const value_t f = brute_frobenius(s);
    if (f < 0) return true;
    const auto table = sieve(s, f);
    for (value_t x = 0; x <= f; ++x)
        if (table(x) == table(f - x)) return false;
    return true;
}

} // namespace nsg::oracle
