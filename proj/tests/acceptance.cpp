// Acceptance suite: every family claim checked exactly over the desk-scale
// parameter grid, plus core/oracle agreement on random semigroups.
// Prints one PASS/FAIL line per criterion; exit status is the failure count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "brute.hpp"
#include "nsg/nsg.hpp"

using namespace nsg;
using Clock = std::chrono::steady_clock;

namespace {

// S: e in [4,9], q in [1,6], d in [1,9]; T: even e in [4,8], even q in
// [max(2, e-4), 8], odd d in [1,9]; gcd(m, d) = 1 in both.
std::vector<Params> grid() {
    std::vector<Params> out;
    for (value_t e = 4; e <= 9; ++e)
        for (value_t q = 1; q <= 6; ++q)
            for (value_t d = 1; d <= 9; ++d)
                if (std::gcd(e + 2 * q + 1, d) == 1) out.push_back(ParamsS::make(e, q, d));
    for (value_t e = 4; e <= 8; e += 2)
        for (value_t q = std::max<value_t>(2, e - 4); q <= 8; q += 2)
            for (value_t d = 1; d <= 9; d += 2)
                if (std::gcd(e + 2 * q, d) == 1) out.push_back(ParamsT::make(e, q, d));
    return out;
}

value_t e_of(const Params& p) { return std::visit([](const auto& x) { return x.e; }, p); }

std::string describe(const Params& p) {
    return std::visit(
        [](const auto& x) {
            return std::string(std::is_same_v<std::decay_t<decltype(x)>, ParamsS> ? "S" : "T") + "(" +
                   std::to_string(x.e) + "," + std::to_string(x.q) + "," + std::to_string(x.d) + ")";
        },
        p);
}

// Runs check on every grid point across threads; returns the first failing instance or "".
std::string first_failure(const std::vector<Params>& points, const std::function<bool(const Params&)>& check) {
    std::vector<char> ok(points.size(), 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) ok[i] = check(points[i]);
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::max(1u, std::thread::hardware_concurrency());
        for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
        worker();
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!ok[i]) return describe(points[i]);
    return "";
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<std::string()> run; // empty string on success, else the reason
};

} // namespace

int main() {
    const auto points = grid();
    std::printf("grid: %zu instances\n", points.size());

    const std::vector<Criterion> criteria{
        {1, "minimality of the defining generator lists", 10.0,
         [&] {
             return first_failure(points, [](const Params& p) {
                 return check_minimality(p) && static_cast<value_t>(build(p).embedding_dimension()) == e_of(p);
             });
         }},
        {2, "Apery closed forms = residue-table Apery = sieve Apery", 30.0,
         [&] {
             return first_failure(points, [](const Params& p) {
                 const auto s = build(p);
                 try {
                     const AperySet closed = apery_closed_form(p); // throws unless a complete residue system
                     return closed == apery_set(s, s.multiplicity()) &&
                            closed == oracle::brute_apery(s, s.multiplicity());
                 } catch (const error&) {
                     return false;
                 }
             });
         }},
        {3, "Frobenius closed forms = sieve Frobenius", 30.0,
         [&] {
             if (oracle::brute_frobenius(NumericalSemigroup::from_generators({7, 8, 17, 18})) != 27)
                 return std::string("anchor F(<7,8,17,18>) != 27");
             if (oracle::brute_frobenius(NumericalSemigroup::from_generators({8, 9, 22, 23})) != 37)
                 return std::string("anchor F(<8,9,22,23>) != 37");
             return first_failure(points, [](const Params& p) {
                 const auto s = build(p);
                 const value_t closed = frobenius_closed_form(p);
                 return closed == oracle::brute_frobenius(s) && closed == frobenius(s);
             });
         }},
        {4, "symmetry (core and mirror oracle), genus = (F+1)/2", 30.0,
         [&] {
             return first_failure(points, [](const Params& p) {
                 const auto s = build(p);
                 return is_symmetric(s) && oracle::brute_symmetric(s) && 2 * genus_from_apery(s) == frobenius(s) + 1;
             });
         }},
        {5, "minimal presentation cardinality = e(e-1)/2 - 1", 120.0,
         [&] {
             auto reason = first_failure(points, [](const Params& p) {
                 return static_cast<value_t>(presentation_cardinality(build(p))) == predicted_presentation_size(e_of(p));
             });
             if (!reason.empty()) return reason;
             // The Betti candidate set against an exhaustive scan on the smaller instances.
             std::vector<Params> small;
             std::copy_if(points.begin(), points.end(), std::back_inserter(small), [](const Params& p) {
                 return std::visit([](const auto& x) { return x.e <= 6 && x.q <= 4 && x.d <= 5; }, p);
             });
             reason = first_failure(small, [](const Params& p) {
                 const auto s = build(p);
                 const auto scan = brute::scan(s.generators(), brute::betti_scan_bound(frobenius(s), s.generators()));
                 return scan.betti == betti_elements(s) && scan.cardinality == presentation_cardinality(s);
             });
             return reason.empty() ? reason : "full scan disagrees at " + reason;
         }},
        {6, "unique expression and notsum lemmas", 60.0,
         [&] {
             return first_failure(points, [](const Params& p) {
                 const auto s = build(p);
                 return check_unique_expression(s) && check_notsum(p) &&
                        factorizations(s, s.apery().max()).size() >= 2;
             });
         }},
        {7, "d = 1 reproduces m, m+1, (q+1)m+(q+2), ..., (q+1)m+(q+e-1)", 10.0,
         [&] {
             for (value_t e = 4; e <= 9; ++e)
                 for (value_t q = 1; q <= 6; ++q) {
                     const value_t m = e + 2 * q + 1;
                     std::vector<value_t> expected{m, m + 1};
                     for (value_t i = 2; i <= e - 1; ++i) expected.push_back((q + 1) * m + q + i);
                     const auto s = build_S(e, q, 1);
                     if (!std::ranges::equal(s.generators(), expected))
                         return "S(" + std::to_string(e) + "," + std::to_string(q) + ",1)";
                 }
             return std::string();
         }},
        {8, "core = oracle on 1000 random coprime generator sets", 60.0,
         [&] {
             std::mt19937_64 rng(0x5eed);
             std::uniform_int_distribution<int> count(3, 6);
             std::uniform_int_distribution<value_t> value(1, 200);
             for (int trial = 0; trial < 1000;) {
                 std::vector<value_t> raw(count(rng));
                 for (auto& g : raw) g = value(rng);
                 if (std::accumulate(raw.begin(), raw.end(), value_t{0},
                                     [](value_t a, value_t b) { return std::gcd(a, b); }) != 1)
                     continue;
                 ++trial;
                 const auto s = NumericalSemigroup::from_generators(raw);
                 const value_t f = oracle::brute_frobenius(s);
                 const auto table = oracle::sieve(s, f + s.multiplicity() + 1);
                 for (value_t n = 0; n <= table.bound; ++n)
                     if (table(n) != s.contains(n)) return "contains mismatch at trial " + std::to_string(trial);
                 if (f != frobenius(s)) return "frobenius mismatch at trial " + std::to_string(trial);
                 if (oracle::brute_apery(s, s.multiplicity()) != apery_set(s, s.multiplicity()))
                     return "apery mismatch at trial " + std::to_string(trial);
                 if (oracle::brute_symmetric(s) != is_symmetric(s))
                     return "symmetry mismatch at trial " + std::to_string(trial);
             }
             return std::string();
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        std::string reason;
        try {
            reason = c.run();
        } catch (const std::exception& ex) {
            reason = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (reason.empty() && secs > c.limit_seconds)
            reason = "exceeded " + std::to_string(c.limit_seconds) + " s";
        const bool ok = reason.empty();
        failed += !ok;
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    ok ? "" : " -- first failure: ", reason.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
