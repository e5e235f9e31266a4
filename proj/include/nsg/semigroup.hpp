#pragma once

// Numerical semigroups given by their minimal generators: membership,
// Apery sets, Frobenius number, genus and symmetry.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

using value_t = std::int64_t;

/// Ap(S, base): position r holds the least element of S congruent to r mod base.
class AperySet {
public:
    AperySet() = default;

    /// Wraps an already residue-indexed table. Throws if it is not one.
    AperySet(value_t base, std::vector<value_t> by_residue) : base_(base), elements_(std::move(by_residue)) {
        if (base_ <= 0 || static_cast<value_t>(elements_.size()) != base_)
            throw error("Apery table size must equal its base");
        for (value_t r = 0; r < base_; ++r)
            if (elements_[r] < 0 || elements_[r] % base_ != r)
                throw error("Apery table entry " + std::to_string(elements_[r]) + " is not in residue class " +
                            std::to_string(r));
    }

    /// Re-indexes an unordered list by residue. Throws unless the values form a
    /// complete residue system mod base.
    static AperySet from_values(value_t base, std::span<const value_t> values) {
        if (base <= 0 || static_cast<value_t>(values.size()) != base)
            throw error("expected " + std::to_string(base) + " values, got " + std::to_string(values.size()));
        std::vector<value_t> table(values.size(), -1);
        for (value_t v : values) {
            if (v < 0) throw error("negative Apery element " + std::to_string(v));
            auto& slot = table[v % base];
            if (slot != -1)
                throw error("values " + std::to_string(slot) + " and " + std::to_string(v) +
                            " share a residue class mod " + std::to_string(base));
            slot = v;
        }
        return AperySet(base, std::move(table));
    }

    value_t base() const noexcept { return base_; }
    std::span<const value_t> by_residue() const noexcept { return elements_; }
    value_t operator[](value_t residue) const { return elements_.at(residue); }
    std::size_t size() const noexcept { return elements_.size(); }

    value_t max() const { return *std::max_element(elements_.begin(), elements_.end()); }

    std::vector<value_t> sorted() const {
        std::vector<value_t> out = elements_;
        std::sort(out.begin(), out.end());
        return out;
    }

    value_t sum() const {
        value_t s = 0;
        for (value_t w : elements_) s = add(s, w);
        return s;
    }

    bool operator==(const AperySet&) const = default;

private:
    value_t base_ = 0;
    std::vector<value_t> elements_;
};

namespace detail {

// One round-robin pass: folds generator g into the residue table `w` (mod w.size()).
// Each cycle of r -> r+g is walked once starting from its minimum entry; no chain
// can improve the minimum, so a single lap reaches the fixpoint for g.
inline void round_robin_relax(std::vector<value_t>& w, value_t g) {
    const value_t mod = static_cast<value_t>(w.size());
    const value_t step = g % mod;
    if (step == 0) return;
    const value_t cycles = std::gcd(step, mod);
    const value_t cycle_len = mod / cycles;
    for (value_t p = 0; p < cycles; ++p) {
        value_t best = infinity;
        value_t start = p;
        for (value_t k = 0, r = p; k < cycle_len; ++k, r = (r + step) % mod)
            if (w[r] < best) {
                best = w[r];
                start = r;
            }
        if (best == infinity) continue;
        value_t cur = best;
        for (value_t k = 1, r = (start + step) % mod; k < cycle_len; ++k, r = (r + step) % mod) {
            cur = std::min(add(cur, g), w[r]);
            w[r] = cur;
        }
    }
}

inline std::vector<value_t> residue_table(value_t mod, std::span<const value_t> gens) {
    std::vector<value_t> w(mod, infinity);
    w[0] = 0;
    for (value_t g : gens) round_robin_relax(w, g);
    return w;
}

} // namespace detail

/// A numerical semigroup stored as its unique minimal system of generators.
/// Immutable; the residue table used for membership is built once at construction.
class NumericalSemigroup {
public:
    /// Reduces `raw` to the minimal generating system (sorted ascending).
    static NumericalSemigroup from_generators(std::span<const value_t> raw) {
        if (raw.empty()) throw empty_input();
        value_t g = 0;
        for (value_t x : raw) {
            if (x <= 0) throw non_positive_generator(x);
            g = std::gcd(g, x);
        }
        if (g != 1) throw non_coprime(g);

        std::vector<value_t> sorted(raw.begin(), raw.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        // Ascending sweep: a candidate is kept iff the elements kept so far
        // (all smaller) cannot represent it. The table mod the multiplicity
        // is extended one kept generator at a time.
        const value_t multiplicity = sorted.front();
        std::vector<value_t> table(multiplicity, infinity);
        table[0] = 0;
        std::vector<value_t> kept{multiplicity};
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            const value_t x = sorted[i];
            if (x >= table[x % multiplicity]) continue;
            kept.push_back(x);
            detail::round_robin_relax(table, x);
        }
        return NumericalSemigroup(std::move(kept), std::move(table));
    }

    static NumericalSemigroup from_generators(std::initializer_list<value_t> raw) {
        return from_generators(std::span<const value_t>(raw.begin(), raw.size()));
    }

    std::span<const value_t> generators() const noexcept { return generators_; }
    value_t multiplicity() const noexcept { return generators_.front(); }
    std::size_t embedding_dimension() const noexcept { return generators_.size(); }

    /// Membership: n is a nonnegative combination of the generators.
    bool contains(value_t n) const noexcept {
        if (n < 0) return false;
        return n >= apery_->by_residue()[n % multiplicity()];
    }

    /// Ap(S, multiplicity), shared with the membership table.
    const AperySet& apery() const noexcept { return *apery_; }

    bool operator==(const NumericalSemigroup& other) const { return generators_ == other.generators_; }

private:
    NumericalSemigroup(std::vector<value_t> gens, std::vector<value_t> table)
        : generators_(std::move(gens)),
          apery_(std::make_shared<const AperySet>(generators_.front(), std::move(table))) {}

    std::vector<value_t> generators_;
    std::shared_ptr<const AperySet> apery_;
};

inline bool contains(const NumericalSemigroup& s, value_t n) noexcept { return s.contains(n); }

/// Ap(S, a) for any nonzero a in S, by round-robin relaxation mod a.
inline AperySet apery_set(const NumericalSemigroup& s, value_t a) {
    if (a <= 0 || !s.contains(a)) throw not_member(a);
    if (a == s.multiplicity()) return s.apery();
    return AperySet(a, detail::residue_table(a, s.generators()));
}

/// Largest integer not in S; -1 when S is all of N.
inline value_t frobenius(const NumericalSemigroup& s) { return sub(s.apery().max(), s.multiplicity()); }

/// Number of gaps via the Apery sum: g = (1/m) * sum(Ap(S,m)) - (m-1)/2.
inline value_t genus_from_apery(const NumericalSemigroup& s) {
    const value_t m = s.multiplicity();
    const value_t numerator = sub(mul(2, s.apery().sum()), mul(m, m - 1));
    if (numerator % (2 * m) != 0) throw error("Apery sum is inconsistent with an integral genus");
    return numerator / (2 * m);
}

struct GapProfile {
    value_t frobenius = -1;
    value_t genus = 0;
    std::vector<value_t> gaps;

    bool operator==(const GapProfile&) const = default;
};

inline GapProfile gap_profile(const NumericalSemigroup& s) {
    GapProfile out;
    out.frobenius = frobenius(s);
    for (value_t x = 1; x <= out.frobenius; ++x)
        if (!s.contains(x)) out.gaps.push_back(x);
    out.genus = static_cast<value_t>(out.gaps.size());
    return out;
}

/// Symmetric iff F is odd and the genus is (F + 1) / 2.
inline bool is_symmetric(const NumericalSemigroup& s) {
    const value_t f = frobenius(s);
    if (f % 2 == 0) return false;
    return genus_from_apery(s) == (f + 1) / 2;
}

} // namespace nsg
