#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "hcob/abelian_group.hpp"

namespace hcob::oracle {

// Finite C_2-modules handled by listing every element. A is Z/m_1 + ... + Z/m_k
// (all m_i >= 1) and the action is an integer matrix acting on coordinates.
struct FiniteModule {
    std::vector<std::int64_t> moduli;
    std::vector<std::vector<std::int64_t>> action;

    using Element = std::vector<std::int64_t>;

    Element reduce(Element x) const
    {
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = ((x[i] % moduli[i]) + moduli[i]) % moduli[i];
        return x;
    }

    std::vector<Element> elements() const
    {
        std::vector<Element> out{Element(moduli.size(), 0)};
        for (std::size_t c = 0; c < moduli.size(); ++c) {
            std::vector<Element> next;
            for (const auto& e : out)
                for (std::int64_t v = 0; v < moduli[c]; ++v) {
                    Element f = e;
                    f[c] = v;
                    next.push_back(f);
                }
            out = std::move(next);
        }
        return out;
    }

    /// x + sign * T x.
    Element one_plus(const Element& x, int sign) const
    {
        Element y = x;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                y[i] += sign * action[i][j] * x[j];
        return reduce(y);
    }

    Element scale(std::int64_t k, Element x) const
    {
        for (auto& v : x)
            v *= k;
        return reduce(x);
    }
};

/// Kill counts |G[k]| for k = 1..|G| of a finite group G; a complete isomorphism invariant.
using KillCounts = std::vector<std::int64_t>;

inline KillCounts kill_counts(const FgAbGroup& g)
{
    const std::int64_t order = static_cast<std::int64_t>(g.order());
    KillCounts out;
    for (std::int64_t k = 1; k <= order; ++k) {
        std::int64_t c = 1;
        for (const auto& d : g.invariant_factors())
            c *= std::gcd(k, static_cast<std::int64_t>(d));
        out.push_back(c);
    }
    return out;
}

// For kernel_mod_image: as a kernel sign, everything; as an image sign, zero.
inline constexpr int kWhole = 2;

/// Kill counts of ker(1 + sk T) / im(1 + si T).
inline KillCounts kernel_mod_image(const FiniteModule& a, int kernel_sign, int image_sign)
{
    const auto all = a.elements();
    auto apply = [&](const FiniteModule::Element& x, int sign) { return a.one_plus(x, sign); };
    std::vector<FiniteModule::Element> kernel;
    std::set<FiniteModule::Element> image;
    const auto zero = a.scale(0, all.front());
    for (const auto& x : all) {
        if (kernel_sign == kWhole || apply(x, kernel_sign) == zero)
            kernel.push_back(x);
        image.insert(image_sign == kWhole ? zero : apply(x, image_sign));
    }
    const std::int64_t order = static_cast<std::int64_t>(kernel.size() / image.size());
    KillCounts out;
    for (std::int64_t k = 1; k <= order; ++k) {
        std::int64_t hits = 0;
        for (const auto& x : kernel)
            hits += image.count(a.scale(k, x)) ? 1 : 0;
        out.push_back(hits / static_cast<std::int64_t>(image.size()));
    }
    return out;
}

/// H_n(C_2; A) with d_n = 1 + (-1)^n T.
inline KillCounts homology(const FiniteModule& a, int n)
{
    const int next = (n + 1) % 2 == 0 ? 1 : -1;
    if (n == 0)
        return kernel_mod_image(a, kWhole, next);
    const int here = n % 2 == 0 ? 1 : -1;
    return kernel_mod_image(a, here, next);
}

/// H^n(C_2; A) with the dual cochain maps.
inline KillCounts cohomology(const FiniteModule& a, int n)
{
    if (n == 0)
        return kernel_mod_image(a, -1, kWhole);
    return n % 2 == 1 ? kernel_mod_image(a, 1, -1) : kernel_mod_image(a, -1, 1);
}

/// H_n(C_2; Z/m) for t acting by sign, m = 0 meaning Z, evaluated from the case formulas.
inline FgAbGroup cyclic_homology_closed_form(long long m, int sign, int n)
{
    const long long two = std::gcd(2LL, m);
    if (n == 0)
        return sign == 1 ? FgAbGroup::from_ints({m}) : FgAbGroup::from_ints({two});
    if (m == 0) {
        const bool odd = n % 2 == 1;
        if ((sign == 1) == odd)
            return FgAbGroup::from_ints({2});
        return FgAbGroup::trivial();
    }
    return FgAbGroup::from_ints({two});
}

}  // namespace hcob::oracle
