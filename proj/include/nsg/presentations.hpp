#pragma once

// Factorizations, Betti elements and minimal presentations via the
// factorization graph: two factorizations of the same element are adjacent
// when their supports meet. An element whose graph has c > 1 components
// contributes c - 1 relations to every minimal presentation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Exponent vector over the minimal generators (position i is the coefficient of n_i).
struct Factorization {
    std::vector<value_t> exponents;

    value_t value(std::span<const value_t> generators) const {
        value_t v = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i) v = add(v, mul(exponents[i], generators[i]));
        return v;
    }

    bool shares_support(const Factorization& other) const noexcept {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] != 0 && other.exponents[i] != 0) return true;
        return false;
    }

    auto operator<=>(const Factorization&) const = default;
};

/// All factorizations of n, in lexicographic order. Empty iff n is not in S.
inline std::vector<Factorization> factorizations(const NumericalSemigroup& s, value_t n) {
    std::vector<Factorization> out;
    if (!s.contains(n)) return out;
    const auto gens = s.generators();
    const std::size_t e = gens.size();
    std::vector<value_t> current(e, 0);

    // DFS from the largest generator down; the smallest absorbs the remainder.
    auto recurse = [&](auto&& self, std::size_t idx, value_t remainder) -> void {
        if (idx == 0) {
            if (remainder % gens[0] == 0) {
                current[0] = remainder / gens[0];
                out.push_back(Factorization{current});
                current[0] = 0;
            }
            return;
        }
        for (value_t c = 0; c * gens[idx] <= remainder; ++c) {
            const value_t rest = remainder - c * gens[idx];
            if (!s.contains(rest)) continue;
            current[idx] = c;
            self(self, idx - 1, rest);
        }
        current[idx] = 0;
    };
    recurse(recurse, e - 1, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Vertices and connected components of the factorization graph of one element.
class FactorizationGraph {
public:
    FactorizationGraph(std::vector<Factorization> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        const std::size_t n = vertices_.size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        // Joining every vertex to the first one seen with the same nonzero
        // coordinate gives the same components as the full edge set.
        const std::size_t e = n == 0 ? 0 : vertices_.front().exponents.size();
        for (std::size_t i = 0; i < e; ++i) {
            std::size_t anchor = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (vertices_[v].exponents[i] == 0) continue;
                if (anchor == n)
                    anchor = v;
                else
                    parent[find(v)] = find(anchor);
            }
        }
        // Components listed in order of their lexicographically smallest vertex.
        std::vector<std::size_t> slot(n, n);
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t root = find(v);
            if (slot[root] == n) {
                slot[root] = components_.size();
                components_.emplace_back();
            }
            components_[slot[root]].push_back(v);
        }
    }

    const std::vector<Factorization>& vertices() const noexcept { return vertices_; }
    /// Vertex indices per component; each list ascending, lists ordered by first vertex.
    const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }

    bool adjacent(std::size_t a, std::size_t b) const {
        return a != b && vertices_[a].shares_support(vertices_[b]);
    }

private:
    std::vector<Factorization> vertices_;
    std::vector<std::vector<std::size_t>> components_;
};

inline FactorizationGraph factorization_graph(const NumericalSemigroup& s, value_t n) {
    return FactorizationGraph(factorizations(s, n));
}

/// Elements whose factorization graph is disconnected, ascending.
///
/// Candidate set: if b is Betti, take factorizations x, y in different
/// components, i in supp(x), j in supp(y). Then b - n_i - n_j is not in S
/// (otherwise a factorization using both would join x and y), so
/// b = n_i + w with w in Ap(S, n_j), and b - n_j is in S.
inline std::vector<value_t> betti_elements(const NumericalSemigroup& s) {
    const auto gens = s.generators();
    std::set<value_t> candidates;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const AperySet ap = apery_set(s, gens[j]);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == j) continue;
            for (value_t w : ap.by_residue()) {
                const value_t b = add(gens[i], w);
                if (s.contains(b - gens[j])) candidates.insert(b);
            }
        }
    }
    std::vector<value_t> out;
    for (value_t b : candidates)
        if (factorization_graph(s, b).component_count() > 1) out.push_back(b);
    return out;
}

struct BettiComponent {
    value_t element = 0;
    std::size_t components = 0;
};

/// One relation per missing connection, each a pair of factorizations of the same element.
struct Presentation {
    std::vector<std::pair<Factorization, Factorization>> relations;
    std::vector<BettiComponent> betti;

    std::size_t cardinality() const noexcept { return relations.size(); }
};

/// Each non-base component contributes (its lexicographic minimum, the overall minimum).
inline Presentation minimal_presentation(const NumericalSemigroup& s) {
    Presentation out;
    for (value_t b : betti_elements(s)) {
        const FactorizationGraph graph = factorization_graph(s, b);
        const auto& comps = graph.components();
        out.betti.push_back({b, comps.size()});
        const Factorization& base = graph.vertices()[comps.front().front()];
        for (std::size_t c = 1; c < comps.size(); ++c)
            out.relations.emplace_back(graph.vertices()[comps[c].front()], base);
    }
    return out;
}

inline std::size_t presentation_cardinality(const NumericalSemigroup& s) {
    std::size_t total = 0;
    for (value_t b : betti_elements(s)) total += factorization_graph(s, b).component_count() - 1;
    return total;
}

} // namespace nsg
