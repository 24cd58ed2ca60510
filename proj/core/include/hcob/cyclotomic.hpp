#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcob/group_ring.hpp"
#include "hcob/integer.hpp"

namespace hcob {

/// Element of Q(zeta_p) in the basis 1, zeta, ..., zeta^{p-2}.
class CyclotomicElement {
public:
    /// Zero of Q(zeta_p). Throws std::invalid_argument unless p is prime.
    explicit CyclotomicElement(long long p);
    CyclotomicElement(long long p, std::vector<Rational> coeffs);

    static CyclotomicElement from_ints(long long p, const std::vector<long long>& coeffs);
    static CyclotomicElement one(long long p);
    /// zeta^k for any integer k.
    static CyclotomicElement zeta_power(long long p, long long k);
    /// Reduces a polynomial in zeta of arbitrary length.
    static CyclotomicElement from_polynomial(long long p, const std::vector<Rational>& poly);

    long long prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when every coordinate is an integer, i.e. the element lies in Z[zeta_p].
    bool is_integral() const;

    /// Field automorphism zeta -> zeta^i, for i coprime to p.
    CyclotomicElement galois(long long i) const;
    /// Norm to Q: product of all Galois conjugates.
    Rational norm() const;

    std::string to_string() const;

    CyclotomicElement& operator+=(const CyclotomicElement& other);
    CyclotomicElement& operator-=(const CyclotomicElement& other);
    CyclotomicElement& operator*=(const CyclotomicElement& other);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator-(CyclotomicElement a);
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) = default;

private:
    void require_same_prime(const CyclotomicElement& other) const;
    long long p_;
    std::vector<Rational> coeffs_;
};

/// Image of x under t -> zeta_p. Requires x.order() == p with p prime.
CyclotomicElement cyclotomic_project(const GroupRingElement& x, long long p);

}  // namespace hcob
