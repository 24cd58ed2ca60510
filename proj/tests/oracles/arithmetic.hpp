#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "c2_homology.hpp"
#include "hcob/abelian_group.hpp"

namespace hcob::oracle {

/// Units i mod p with i^n = +-1, paired with that sign, by repeated multiplication.
inline std::vector<std::pair<long long, int>> power_pm_one(long long p, long long n)
{
    std::vector<std::pair<long long, int>> out;
    for (long long i = 1; i < p; ++i) {
        long long x = 1;
        for (long long k = 0; k < n; ++k)
            x = (x * i) % p;
        if (x == 1)
            out.emplace_back(i, 1);
        else if (x == p - 1)
            out.emplace_back(i, -1);
    }
    return out;
}

inline bool is_power_of(std::int64_t x, std::int64_t l)
{
    while (x % l == 0)
        x /= l;
    return x == 1;
}

/// Kill counts of the l-primary part (keep_primary) or of the part prime to l, found by
/// listing the elements of the given finite group and testing their orders.
inline KillCounts primary_part_counts(const FgAbGroup& g, std::int64_t l, bool keep_primary)
{
    FiniteModule m;
    for (const auto& d : g.invariant_factors())
        m.moduli.push_back(static_cast<std::int64_t>(d));
    const auto all = m.elements();
    auto order_of = [&](const FiniteModule::Element& x) {
        std::int64_t k = 1;
        auto y = x;
        while (y != m.scale(0, x)) {
            ++k;
            y = m.scale(k, x);
        }
        return k;
    };
    std::vector<FiniteModule::Element> part;
    for (const auto& x : all) {
        const std::int64_t ord = order_of(x);
        const bool primary = is_power_of(ord, l);
        const bool coprime = ord % l != 0;
        if (keep_primary ? primary : coprime)
            part.push_back(x);
    }
    KillCounts out;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(part.size()); ++k) {
        std::int64_t c = 0;
        for (const auto& x : part)
            c += m.scale(k, x) == m.scale(0, x) ? 1 : 0;
        out.push_back(c);
    }
    return out;
}

}  // namespace hcob::oracle
