#pragma once

#include <cstdint>

#include "hcob/abelian_group.hpp"
#include "hcob/int_matrix.hpp"

namespace hcob {

/// Matrix of multiplication by x on Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
/// x is a polynomial in zeta given by integer coefficients.
IntMatrix cyclotomic_multiplication_matrix(long long p, const std::vector<long long>& x);

/// Tor_i^{Z[C_p]}(Z, Z[zeta_p]), from the periodic resolution of Z alternating
/// multiplication by t - 1 and by the norm element. Throws std::invalid_argument
/// unless p is prime and i >= 0.
FgAbGroup tor_pi_r(long long p, int i);

struct K3Divisibility {
    long long p = 0;
    /// |K_3(F_p)| = p^2 - 1.
    std::int64_t order = 0;
    int three_adic_valuation = 0;
    bool divisible_by_three = false;
    /// K_3(F_p) has no 3-torsion obstruction to injectivity exactly when p != 3.
    bool injective = false;
};

/// Throws std::invalid_argument if p is not prime.
K3Divisibility k3_divisibility(long long p);

/// l-primary part. Throws std::invalid_argument if g has a free summand or l is not prime.
FgAbGroup localize(const FgAbGroup& g, long long l);
/// Part of order prime to l. Same preconditions as localize.
FgAbGroup localize_away(const FgAbGroup& g, long long l);

/// Direct sum by invariant factors.
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

}  // namespace hcob
