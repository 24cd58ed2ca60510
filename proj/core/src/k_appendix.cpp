#include "hcob/k_appendix.hpp"

#include <stdexcept>

#include "hcob/cyclotomic.hpp"

namespace hcob {

IntMatrix cyclotomic_multiplication_matrix(long long p, const std::vector<long long>& x)
{
    std::vector<Rational> poly(x.begin(), x.end());
    const CyclotomicElement xz = CyclotomicElement::from_polynomial(p, poly);
    const auto n = static_cast<std::size_t>(p - 1);
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const CyclotomicElement col = xz * CyclotomicElement::zeta_power(p, static_cast<long long>(j));
        for (std::size_t r = 0; r < n; ++r) {
            const Rational& c = col.coeffs()[r];
            if (denominator(c) != 1)
                throw std::logic_error("non-integral product in Z[zeta_p]");
            m.at(r, j) = numerator(c);
        }
    }
    return m;
}

namespace {

/// Differential d_i of the tensored resolution, from degree i to i - 1 (i >= 1).
IntMatrix tor_differential(long long p, int i)
{
    if (i % 2 == 1)
        return cyclotomic_multiplication_matrix(p, {-1, 1});
    return cyclotomic_multiplication_matrix(p, std::vector<long long>(static_cast<std::size_t>(p), 1));
}

}  // namespace

FgAbGroup tor_pi_r(long long p, int i)
{
    if (!is_prime(p))
        throw std::invalid_argument("tor_pi_r needs a prime");
    if (i < 0)
        throw std::invalid_argument("homological degree must be non-negative");
    const auto n = static_cast<std::size_t>(p - 1);
    const IntMatrix cycles = i == 0 ? IntMatrix::identity(n) : kernel_basis(tor_differential(p, i));
    return subquotient(cycles, tor_differential(p, i + 1));
}

K3Divisibility k3_divisibility(long long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("k3_divisibility needs a prime");
    K3Divisibility r;
    r.p = p;
    r.order = checked_add(checked_mul(p, p), -1);
    for (std::int64_t m = r.order; m % 3 == 0; m /= 3)
        ++r.three_adic_valuation;
    r.divisible_by_three = r.three_adic_valuation > 0;
    r.injective = p != 3;
    return r;
}

namespace {

void require_torsion(const FgAbGroup& g, long long l)
{
    if (!is_prime(l))
        throw std::invalid_argument("localization needs a prime");
    if (!g.is_finite())
        throw std::invalid_argument("localization of torsion bookkeeping rejects free summands");
}

bool is_power_of(BigInt q, long long l)
{
    while (q % l == 0)
        q /= l;
    return q == 1;
}

}  // namespace

FgAbGroup localize(const FgAbGroup& g, long long l)
{
    require_torsion(g, l);
    std::vector<BigInt> keep;
    for (const auto& q : g.elementary_divisors())
        if (is_power_of(q, l))
            keep.push_back(q);
    return FgAbGroup(keep);
}

FgAbGroup localize_away(const FgAbGroup& g, long long l)
{
    require_torsion(g, l);
    std::vector<BigInt> keep;
    for (const auto& q : g.elementary_divisors())
        if (q % l != 0)
            keep.push_back(q);
    return FgAbGroup(keep);
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<BigInt> all = a.invariant_factors();
    all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbGroup(all);
}

}  // namespace hcob
