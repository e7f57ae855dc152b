#pragma once

// Shared helpers for the test suites: independent brute-force oracles and
// deterministic random generators. Oracles here must not reuse the library's
// search/enumeration code paths they are checking.

#include <algorithm>
#include <random>
#include <vector>

#include "ksq/assignment.hpp"
#include "ksq/distribution.hpp"
#include "ksq/scalar.hpp"
#include "ksq/scenario.hpp"

namespace ksqtest {

inline ksq::Rational rat(long num, long den = 1) {
    return ksq::Rational(num, den);
}

inline ksq::Assignment assignment_from_mask(int n, unsigned mask) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) bits[i] = 1;
    return ksq::Assignment(std::move(bits));
}

/// Oracle: does the bitmask violate at-most-one on any context?
inline bool mask_exclusive(const ksq::Scenario& s, unsigned mask) {
    for (const ksq::Context& c : s.contexts()) {
        int ones = 0;
        for (int e : c.members) ones += mask >> e & 1;
        if (ones > 1) return false;
    }
    return true;
}

/// Oracle: exactly-one on every complete context?
inline bool mask_complete(const ksq::Scenario& s, unsigned mask) {
    for (const ksq::Context& c : s.contexts()) {
        if (!c.complete) continue;
        int ones = 0;
        for (int e : c.members) ones += mask >> e & 1;
        if (ones != 1) return false;
    }
    return true;
}

/// Oracle: all exclusive assignments by scanning every bitmask (N <= 20).
inline std::vector<ksq::Assignment> brute_force_exclusive(const ksq::Scenario& s) {
    std::vector<ksq::Assignment> out;
    const int n = s.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (mask_exclusive(s, mask)) out.push_back(assignment_from_mask(n, mask));
    std::sort(out.begin(), out.end());
    return out;
}

/// Oracle: does any bitmask satisfy exclusivity and completeness? (N <= 20)
inline bool brute_force_ks_satisfiable(const ksq::Scenario& s) {
    const int n = s.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (mask_exclusive(s, mask) && mask_complete(s, mask)) return true;
    return false;
}

/// Valid random scenario: N in [2, max_events], a few deduplicated contexts
/// of size 2..min(N,4), random complete flags.
inline ksq::Scenario random_scenario(std::mt19937& rng, int max_events = 12) {
    std::uniform_int_distribution<int> n_dist(2, max_events);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> count_dist(1, std::min(6, n));
    std::uniform_int_distribution<int> size_dist(2, std::min(n, 4));
    std::uniform_int_distribution<int> flag_dist(0, 1);

    std::vector<ksq::Context> contexts;
    std::vector<std::vector<int>> seen;
    const int wanted = count_dist(rng);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int k = 0; k < wanted; ++k) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> members(pool.begin(), pool.begin() + size_dist(rng));
        std::sort(members.begin(), members.end());
        if (std::find(seen.begin(), seen.end(), members) != seen.end()) continue;
        seen.push_back(members);
        contexts.push_back({members, flag_dist(rng) == 1});
    }
    std::vector<std::string> events;
    for (int i = 0; i < n; ++i) events.push_back("E" + std::to_string(i));
    return ksq::Scenario("random", std::move(events), std::move(contexts));
}

/// Random rational in [0, 1] with denominator up to max_den.
inline ksq::Rational random_unit_rational(std::mt19937& rng, int max_den = 10) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return ksq::Rational(num_dist(rng), den);
}

/// Random normalized signed rational weights over a random support (N <= 12).
inline ksq::QuasiDistribution random_quasi_distribution(std::mt19937& rng,
                                                        const ksq::Scenario& s) {
    const int n = s.size();
    std::uniform_int_distribution<int> size_dist(1, std::min(1 << n, 12));
    std::uniform_int_distribution<unsigned> mask_dist(0, (1u << n) - 1);
    std::uniform_int_distribution<int> weight_dist(-3, 5);
    for (;;) {
        std::vector<unsigned> masks;
        const int count = size_dist(rng);
        while (static_cast<int>(masks.size()) < count) {
            unsigned m = mask_dist(rng);
            if (std::find(masks.begin(), masks.end(), m) == masks.end())
                masks.push_back(m);
        }
        std::vector<int> raw(masks.size());
        int total = 0;
        for (auto& w : raw) total += (w = weight_dist(rng));
        if (total == 0) continue;
        std::vector<std::pair<ksq::Assignment, ksq::Scalar>> support;
        for (std::size_t i = 0; i < masks.size(); ++i)
            support.emplace_back(assignment_from_mask(n, masks[i]),
                                 ksq::Scalar(ksq::Rational(raw[i], total)));
        return ksq::QuasiDistribution(s, std::move(support),
                                      ksq::NumericMode::Rational);
    }
}

}  // namespace ksqtest
