#include "hcob/group_ring.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace hcob {

namespace {

std::size_t reduce_exponent(long long k, std::size_t n)
{
    const long long m = static_cast<long long>(n);
    long long r = k % m;
    if (r < 0)
        r += m;
    return static_cast<std::size_t>(r);
}

}  // namespace

GroupRingElement::GroupRingElement() : coeffs_(1) {}

GroupRingElement::GroupRingElement(std::size_t order) : coeffs_(order)
{
    if (order == 0)
        throw std::invalid_argument("group order must be positive");
}

GroupRingElement::GroupRingElement(std::size_t order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (order == 0)
        throw std::invalid_argument("group order must be positive");
    if (coeffs_.size() != order)
        throw std::invalid_argument("coefficient vector length must equal the group order");
}

GroupRingElement GroupRingElement::from_ints(std::size_t order, std::initializer_list<long long> coeffs)
{
    return from_ints(order, std::vector<long long>(coeffs));
}

GroupRingElement GroupRingElement::from_ints(std::size_t order, const std::vector<long long>& coeffs)
{
    if (coeffs.size() > order)
        throw std::invalid_argument("more coefficients than the group order");
    std::vector<BigInt> c(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c[k] = coeffs[k];
    return GroupRingElement(order, std::move(c));
}

GroupRingElement GroupRingElement::one(std::size_t order) { return monomial(order, 0, 1); }

GroupRingElement GroupRingElement::monomial(std::size_t order, long long k, int sign)
{
    GroupRingElement r(order);
    r.coeffs_[reduce_exponent(k, order)] = sign;
    return r;
}

BigInt GroupRingElement::augmentation() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_)
        s += c;
    return s;
}

bool GroupRingElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

std::string GroupRingElement::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (k == 0 || mag != 1)
            out += mag.str();
        if (k >= 1)
            out += "t";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

void GroupRingElement::require_same_order(const GroupRingElement& other) const
{
    if (order() != other.order())
        throw std::invalid_argument("group ring elements have different orders");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other)
{
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other)
{
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& other)
{
    require_same_order(other);
    const std::size_t n = order();
    std::vector<BigInt> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (other.coeffs_[j] == 0)
                continue;
            const std::size_t k = i + j < n ? i + j : i + j - n;
            r[k] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    return *this;
}

GroupRingElement operator-(GroupRingElement a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

GroupRingElement GroupRingElement::pow(long long e) const
{
    GroupRingElement base = *this;
    if (e < 0) {
        auto inv = invert_unit(*this);
        if (!inv)
            throw std::domain_error("negative power of a non-unit");
        base = *inv;
        e = -e;
    }
    GroupRingElement result = one(order());
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

GroupRingElement gr_arith(const GroupRingElement& x, const GroupRingElement& y, RingOp op)
{
    switch (op) {
    case RingOp::add: return x + y;
    case RingOp::sub: return x - y;
    case RingOp::mul: return x * y;
    case RingOp::neg: return -x;
    }
    throw std::invalid_argument("unknown ring operation");
}

int OrientationCharacter::value(long long k) const
{
    if (sign_of_generator == 1)
        return 1;
    return (k % 2 == 0) ? 1 : -1;
}

void OrientationCharacter::validate(std::size_t order) const
{
    if (sign_of_generator != 1 && sign_of_generator != -1)
        throw std::invalid_argument("orientation character must take values +-1");
    if (sign_of_generator == -1 && order % 2 == 1)
        throw std::invalid_argument("a nontrivial orientation character needs even group order");
}

GroupRingElement involution(const GroupRingElement& x, OrientationCharacter w)
{
    const std::size_t n = x.order();
    w.validate(n);
    std::vector<BigInt> r(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (n - k) % n;
        r[k] = x[src];
        if (w.value(static_cast<long long>(k)) < 0)
            r[k] = -r[k];
    }
    return GroupRingElement(n, std::move(r));
}

GroupRingElement galois_twist(const GroupRingElement& x, long long i)
{
    const std::size_t n = x.order();
    const std::size_t ii = reduce_exponent(i, n);
    if (std::gcd(ii, n) != 1)
        throw std::invalid_argument("twist exponent must be coprime to the group order");
    std::vector<BigInt> r(n);
    for (std::size_t k = 0; k < n; ++k)
        r[(k * ii) % n] += x[k];
    return GroupRingElement(n, std::move(r));
}

std::optional<GroupRingElement> invert_unit(const GroupRingElement& x)
{
    const std::size_t n = x.order();
    // (x*y)_k = sum_j x_{k-j} y_j, so solve C y = e_0 with C[k][j] = x_{k-j}.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j)
            a[k][j] = Rational(x[(k + n - j) % n]);
        a[k][n] = k == 0 ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j <= n; ++j)
            a[col][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j <= n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    std::vector<BigInt> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = a[k][n];
        if (boost::multiprecision::denominator(v) != 1)
            return std::nullopt;
        y[k] = boost::multiprecision::numerator(v);
    }
    return GroupRingElement(n, std::move(y));
}

std::optional<std::pair<int, std::size_t>> as_trivial_unit(const GroupRingElement& x)
{
    std::optional<std::pair<int, std::size_t>> found;
    for (std::size_t k = 0; k < x.order(); ++k) {
        if (x[k] == 0)
            continue;
        if (found || (x[k] != 1 && x[k] != -1))
            return std::nullopt;
        found = std::make_pair(x[k] == 1 ? 1 : -1, k);
    }
    return found;
}

WhiteheadClass::WhiteheadClass(GroupRingElement x) : rep_(std::move(x))
{
    auto inv = invert_unit(rep_);
    if (!inv)
        throw std::domain_error("not a unit: " + rep_.to_string());
    inv_ = std::move(*inv);
}

WhiteheadClass::WhiteheadClass(GroupRingElement rep, GroupRingElement inv)
    : rep_(std::move(rep)), inv_(std::move(inv))
{
}

std::optional<WhiteheadClass> WhiteheadClass::from_unit(const GroupRingElement& x)
{
    auto inv = invert_unit(x);
    if (!inv)
        return std::nullopt;
    return WhiteheadClass(x, std::move(*inv));
}

WhiteheadClass WhiteheadClass::identity(std::size_t order)
{
    return WhiteheadClass(GroupRingElement::one(order), GroupRingElement::one(order));
}

WhiteheadClass WhiteheadClass::pow(long long e) const
{
    const long long m = e < 0 ? -e : e;
    WhiteheadClass r = identity(order());
    for (long long k = 0; k < m; ++k)
        r = r * *this;
    return e < 0 ? r.inverted() : r;
}

WhiteheadClass WhiteheadClass::twisted(long long i) const
{
    return WhiteheadClass(galois_twist(rep_, i), galois_twist(inv_, i));
}

WhiteheadClass WhiteheadClass::conjugated(OrientationCharacter w) const
{
    return WhiteheadClass(involution(rep_, w), involution(inv_, w));
}

WhiteheadClass operator*(const WhiteheadClass& a, const WhiteheadClass& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("Whitehead classes over different groups");
    return WhiteheadClass(a.rep_ * b.rep_, a.inv_ * b.inv_);
}

std::optional<TrivialUnitWitness> wh_class_witness(const WhiteheadClass& x, const WhiteheadClass& y)
{
    if (x.order() != y.order())
        throw std::invalid_argument("Whitehead classes over different groups");
    const GroupRingElement q = x.representative() * y.inverse();
    auto t = as_trivial_unit(q);
    if (!t)
        return std::nullopt;
    return TrivialUnitWitness{t->first, t->second};
}

bool wh_class_equal(const WhiteheadClass& x, const WhiteheadClass& y)
{
    return wh_class_witness(x, y).has_value();
}

}  // namespace hcob
