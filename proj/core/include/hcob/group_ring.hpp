#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hcob/integer.hpp"

namespace hcob {

/// Element of the integral group ring Z[C_n]; coefficient k belongs to t^k.
class GroupRingElement {
public:
    GroupRingElement();
    explicit GroupRingElement(std::size_t order);
    GroupRingElement(std::size_t order, std::vector<BigInt> coeffs);

    static GroupRingElement from_ints(std::size_t order, std::initializer_list<long long> coeffs);
    static GroupRingElement from_ints(std::size_t order, const std::vector<long long>& coeffs);
    static GroupRingElement one(std::size_t order);
    /// sign * t^k, with k reduced modulo the order.
    static GroupRingElement monomial(std::size_t order, long long k, int sign = 1);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }

    BigInt augmentation() const;
    bool is_zero() const;

    /// Human readable polynomial in t, e.g. "2+2t-t^3".
    std::string to_string() const;

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);
    GroupRingElement& operator*=(const GroupRingElement& other);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(GroupRingElement a, const GroupRingElement& b) { return a *= b; }
    friend GroupRingElement operator-(GroupRingElement a);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) = default;

    /// Integer power; negative exponents require a unit. Throws std::domain_error otherwise.
    GroupRingElement pow(long long e) const;

private:
    void require_same_order(const GroupRingElement& other) const;
    std::vector<BigInt> coeffs_;
};

enum class RingOp { add, sub, mul, neg };

/// Dispatching form of the ring operations; y is ignored for neg.
GroupRingElement gr_arith(const GroupRingElement& x, const GroupRingElement& y, RingOp op);

/// Orientation character on C_n, determined by its value on the generator.
struct OrientationCharacter {
    int sign_of_generator = 1;

    /// Value on t^k.
    int value(long long k) const;
    /// Throws std::invalid_argument if the sign is not +-1 or is -1 on an odd order group.
    void validate(std::size_t order) const;
};

/// a -> sum w(g) a_g g^{-1}.
GroupRingElement involution(const GroupRingElement& x, OrientationCharacter w = {});

/// Ring automorphism t -> t^i. Requires gcd(i, n) = 1.
GroupRingElement galois_twist(const GroupRingElement& x, long long i);

/// Exact inverse from the circulant system, or nullopt if x is not a unit.
std::optional<GroupRingElement> invert_unit(const GroupRingElement& x);

/// If x = sign * t^k, returns (sign, k).
std::optional<std::pair<int, std::size_t>> as_trivial_unit(const GroupRingElement& x);

/// A unit of Z[C_n] standing for its class in the Whitehead group.
class WhiteheadClass {
public:
    /// Throws std::domain_error if x is not a unit.
    explicit WhiteheadClass(GroupRingElement x);
    static std::optional<WhiteheadClass> from_unit(const GroupRingElement& x);
    static WhiteheadClass identity(std::size_t order);

    /// Class of the inverse unit.
    WhiteheadClass inverted() const { return WhiteheadClass(inv_, rep_); }
    /// Integer power of the representative.
    WhiteheadClass pow(long long e) const;
    WhiteheadClass twisted(long long i) const;
    WhiteheadClass conjugated(OrientationCharacter w = {}) const;
    friend WhiteheadClass operator*(const WhiteheadClass& a, const WhiteheadClass& b);

    const GroupRingElement& representative() const { return rep_; }
    const GroupRingElement& inverse() const { return inv_; }
    std::size_t order() const { return rep_.order(); }

private:
    WhiteheadClass(GroupRingElement rep, GroupRingElement inv);
    GroupRingElement rep_;
    GroupRingElement inv_;
};

/// Witness for x ~ y: the trivial unit sign * t^k with x * y^{-1} = sign * t^k.
struct TrivialUnitWitness {
    int sign = 1;
    std::size_t power = 0;
};

std::optional<TrivialUnitWitness> wh_class_witness(const WhiteheadClass& x, const WhiteheadClass& y);
bool wh_class_equal(const WhiteheadClass& x, const WhiteheadClass& y);

}  // namespace hcob
