#include "hcob/cyclotomic.hpp"

#include <stdexcept>
#include <utility>

namespace hcob {

namespace {

void require_prime(long long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("cyclotomic field needs a prime, got " + std::to_string(p));
}

}  // namespace

CyclotomicElement::CyclotomicElement(long long p) : p_(p)
{
    require_prime(p);
    coeffs_.assign(static_cast<std::size_t>(p - 1), Rational(0));
}

CyclotomicElement::CyclotomicElement(long long p, std::vector<Rational> coeffs)
    : p_(p), coeffs_(std::move(coeffs))
{
    require_prime(p);
    if (coeffs_.size() != static_cast<std::size_t>(p - 1))
        throw std::invalid_argument("cyclotomic coefficient vector must have length p-1");
}

CyclotomicElement CyclotomicElement::from_ints(long long p, const std::vector<long long>& coeffs)
{
    std::vector<Rational> poly(coeffs.begin(), coeffs.end());
    return from_polynomial(p, poly);
}

CyclotomicElement CyclotomicElement::one(long long p) { return zeta_power(p, 0); }

CyclotomicElement CyclotomicElement::zeta_power(long long p, long long k)
{
    require_prime(p);
    long long r = k % p;
    if (r < 0)
        r += p;
    std::vector<Rational> poly(static_cast<std::size_t>(p));
    poly[static_cast<std::size_t>(r)] = 1;
    return from_polynomial(p, poly);
}

CyclotomicElement CyclotomicElement::from_polynomial(long long p, const std::vector<Rational>& poly)
{
    require_prime(p);
    const auto n = static_cast<std::size_t>(p);
    // Fold exponents modulo p, then use zeta^{p-1} = -(1 + ... + zeta^{p-2}).
    std::vector<Rational> folded(n);
    for (std::size_t k = 0; k < poly.size(); ++k)
        folded[k % n] += poly[k];
    std::vector<Rational> c(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        c[k] = folded[k] - folded[n - 1];
    return CyclotomicElement(p, std::move(c));
}

bool CyclotomicElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicElement::is_integral() const
{
    for (const auto& c : coeffs_)
        if (boost::multiprecision::denominator(c) != 1)
            return false;
    return true;
}

CyclotomicElement CyclotomicElement::galois(long long i) const
{
    long long ii = i % p_;
    if (ii < 0)
        ii += p_;
    if (ii == 0)
        throw std::invalid_argument("Galois exponent must be coprime to p");
    std::vector<Rational> poly(static_cast<std::size_t>(p_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[(k * static_cast<std::size_t>(ii)) % static_cast<std::size_t>(p_)] += coeffs_[k];
    return from_polynomial(p_, poly);
}

Rational CyclotomicElement::norm() const
{
    CyclotomicElement prod = one(p_);
    for (long long i = 1; i < p_; ++i)
        prod *= galois(i);
    // The product is Galois invariant, hence rational: a*1 + 0*zeta + ...
    for (std::size_t k = 1; k < prod.coeffs_.size(); ++k)
        if (prod.coeffs_[k] != 0)
            throw std::logic_error("norm is not rational");
    return prod.coeffs_.empty() ? Rational(1) : prod.coeffs_[0];
}

std::string CyclotomicElement::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (k == 0 || mag != 1)
            out += hcob::to_string(mag);
        if (k >= 1)
            out += "z";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

void CyclotomicElement::require_same_prime(const CyclotomicElement& other) const
{
    if (p_ != other.p_)
        throw std::invalid_argument("cyclotomic elements over different fields");
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other)
{
    require_same_prime(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other)
{
    require_same_prime(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& other)
{
    require_same_prime(other);
    std::vector<Rational> poly(2 * coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            poly[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    *this = from_polynomial(p_, poly);
    return *this;
}

CyclotomicElement operator-(CyclotomicElement a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

CyclotomicElement cyclotomic_project(const GroupRingElement& x, long long p)
{
    require_prime(p);
    if (x.order() != static_cast<std::size_t>(p))
        throw std::invalid_argument("group ring order differs from the cyclotomic prime");
    std::vector<Rational> poly(x.coeffs().begin(), x.coeffs().end());
    return CyclotomicElement::from_polynomial(p, poly);
}

}  // namespace hcob
