#include "hcob/abelian_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcob {

namespace {

bool lattice_contains(const IntMatrix& basis, const IntVector& v)
{
    if (basis.cols() == 0)
        return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
    return solve_in_basis(basis, v).has_value();
}

IntMatrix identity_plus(const IntMatrix& t, int sign)
{
    const IntMatrix one = IntMatrix::identity(t.rows());
    return sign > 0 ? one + t : one - t;
}

/// {x : f x in R}, as generating columns (R included).
IntMatrix preimage_of_relations(const IntMatrix& f, const IntMatrix& relations)
{
    const std::size_t g = f.rows();
    const IntMatrix k = kernel_basis(f.hstack(relations));
    return k.block(0, g, 0, k.cols()).hstack(relations);
}

FgAbGroup kernel_mod_image(const InvolutiveAbelianGroup& a, const IntMatrix& f, const IntMatrix& g)
{
    const IntMatrix& r = a.relations();
    return subquotient(preimage_of_relations(f, r), g.hstack(r));
}

/// Differential of the periodic C_2 resolution complex in degree n >= 1.
IntMatrix differential(const InvolutiveAbelianGroup& a, int n)
{
    return identity_plus(a.involution(), n % 2 == 0 ? 1 : -1);
}

}  // namespace

FgAbGroup::FgAbGroup(const std::vector<BigInt>& cyclic_orders)
{
    const std::size_t n = cyclic_orders.size();
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d.at(i, i) = cyclic_orders[i];
    factors_ = cokernel(d).factors_;
}

FgAbGroup FgAbGroup::from_ints(const std::vector<long long>& cyclic_orders)
{
    return FgAbGroup(std::vector<BigInt>(cyclic_orders.begin(), cyclic_orders.end()));
}

std::size_t FgAbGroup::free_rank() const
{
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), BigInt(0)));
}

BigInt FgAbGroup::order() const
{
    if (!is_finite())
        throw std::domain_error("order of an infinite group");
    BigInt o = 1;
    for (const auto& f : factors_)
        o *= f;
    return o;
}

std::vector<BigInt> FgAbGroup::elementary_divisors() const
{
    std::vector<BigInt> out;
    for (BigInt f : factors_) {
        if (f == 0)
            continue;
        for (BigInt p = 2; p * p <= f; ++p) {
            BigInt q = 1;
            while (f % p == 0) {
                f /= p;
                q *= p;
            }
            if (q > 1)
                out.push_back(q);
        }
        if (f > 1)
            out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FgAbGroup::to_string() const
{
    if (factors_.empty())
        return "0";
    std::string out;
    for (const auto& f : factors_) {
        if (f == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += "Z/" + f.str();
    }
    const std::size_t r = free_rank();
    if (r > 0) {
        if (!out.empty())
            out += " + ";
        out += r == 1 ? "Z" : "Z^" + std::to_string(r);
    }
    return out;
}

FgAbGroup cokernel(const IntMatrix& m)
{
    const SmithResult s = smith_normal_form(m);
    FgAbGroup g;
    for (const auto& d : s.diag)
        if (d != 1)
            g.factors_.push_back(d);
    for (std::size_t i = s.rank(); i < m.rows(); ++i)
        g.factors_.emplace_back(0);
    return g;
}

FgAbGroup subquotient(const IntMatrix& k_gens, const IntMatrix& i_gens)
{
    if (k_gens.rows() != i_gens.rows())
        throw std::invalid_argument("subquotient lattices live in different dimensions");
    const IntMatrix kb = column_basis(k_gens);
    IntMatrix coords(kb.cols(), i_gens.cols());
    for (std::size_t j = 0; j < i_gens.cols(); ++j) {
        const IntVector v = i_gens.column(j);
        if (kb.cols() == 0) {
            if (!std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; }))
                throw std::invalid_argument("subquotient: denominator not contained in numerator");
            continue;
        }
        auto c = solve_in_basis(kb, v);
        if (!c)
            throw std::invalid_argument("subquotient: denominator not contained in numerator");
        for (std::size_t i = 0; i < kb.cols(); ++i)
            coords.at(i, j) = (*c)[i];
    }
    return cokernel(coords);
}

InvolutiveAbelianGroup::InvolutiveAbelianGroup(std::size_t generators, IntMatrix relations, IntMatrix involution)
    : generators_(generators), relations_(std::move(relations)), involution_(std::move(involution))
{
    if (relations_.rows() != generators_ && !(relations_.rows() == 0 && relations_.cols() == 0))
        throw std::invalid_argument("relation matrix must have one row per generator");
    if (relations_.rows() == 0)
        relations_ = IntMatrix(generators_, 0);
    if (involution_.rows() != generators_ || involution_.cols() != generators_)
        throw std::invalid_argument("involution must be a square matrix on the generators");
    const IntMatrix basis = column_basis(relations_);
    for (std::size_t j = 0; j < relations_.cols(); ++j)
        if (!lattice_contains(basis, involution_.apply(relations_.column(j))))
            throw std::invalid_argument("involution does not preserve the relation lattice");
    const IntMatrix sq = involution_ * involution_ - IntMatrix::identity(generators_);
    for (std::size_t j = 0; j < generators_; ++j)
        if (!lattice_contains(basis, sq.column(j)))
            throw std::invalid_argument("involution does not square to the identity");
}

InvolutiveAbelianGroup InvolutiveAbelianGroup::cyclic(long long m, int sign)
{
    return sum_of_cyclic({m}, sign);
}

InvolutiveAbelianGroup InvolutiveAbelianGroup::sum_of_cyclic(const std::vector<long long>& orders, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("action sign must be +-1");
    const std::size_t g = orders.size();
    std::vector<IntVector> rels;
    for (std::size_t i = 0; i < g; ++i) {
        if (orders[i] < 0)
            throw std::invalid_argument("cyclic order must be non-negative");
        if (orders[i] == 0)
            continue;
        IntVector r(g);
        r[i] = orders[i];
        rels.push_back(std::move(r));
    }
    IntMatrix t = IntMatrix::identity(g);
    if (sign < 0)
        t = BigInt(-1) * t;
    return InvolutiveAbelianGroup(g, IntMatrix::from_columns(rels, g), std::move(t));
}

InvolutiveAbelianGroup InvolutiveAbelianGroup::free(std::size_t rank, int sign)
{
    return sum_of_cyclic(std::vector<long long>(rank, 0), sign);
}

InvolutiveAbelianGroup InvolutiveAbelianGroup::zero()
{
    return InvolutiveAbelianGroup(0, IntMatrix(0, 0), IntMatrix(0, 0));
}

FgAbGroup InvolutiveAbelianGroup::underlying() const { return cokernel(relations_); }

InvolutiveAbelianGroup InvolutiveAbelianGroup::with_sign(int sign) const
{
    return InvolutiveAbelianGroup(generators_, relations_, sign > 0 ? involution_ : BigInt(-1) * involution_);
}

bool InvolutiveAbelianGroup::equal_elements(const IntVector& x, const IntVector& y) const
{
    if (x.size() != generators_ || y.size() != generators_)
        throw std::invalid_argument("element has the wrong number of coordinates");
    IntVector d(generators_);
    for (std::size_t i = 0; i < generators_; ++i)
        d[i] = x[i] - y[i];
    return in_lattice(relations_, d);
}

IntMatrix cycle_lattice_c2(const InvolutiveAbelianGroup& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("homology degree must be non-negative");
    if (n == 0)
        return IntMatrix::identity(a.generator_count());
    return preimage_of_relations(differential(a, n), a.relations());
}

IntMatrix boundary_lattice_c2(const InvolutiveAbelianGroup& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("homology degree must be non-negative");
    return differential(a, n + 1).hstack(a.relations());
}

FgAbGroup homology_c2(const InvolutiveAbelianGroup& a, int n)
{
    return subquotient(cycle_lattice_c2(a, n), boundary_lattice_c2(a, n));
}

FgAbGroup cohomology_c2(const InvolutiveAbelianGroup& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("cohomology degree must be non-negative");
    const IntMatrix minus = identity_plus(a.involution(), -1);
    const IntMatrix plus = identity_plus(a.involution(), 1);
    const std::size_t g = a.generator_count();
    if (n == 0)
        return kernel_mod_image(a, minus, IntMatrix(g, 0));
    if (n % 2 == 1)
        return kernel_mod_image(a, plus, minus);
    return kernel_mod_image(a, minus, plus);
}

FgAbGroup tate_homology_c2(const InvolutiveAbelianGroup& a, int n)
{
    if (n >= 1)
        return homology_c2(a, n);
    const IntMatrix minus = identity_plus(a.involution(), -1);
    const IntMatrix plus = identity_plus(a.involution(), 1);
    if (n == 0)
        return kernel_mod_image(a, plus, minus);
    if (n == -1)
        return kernel_mod_image(a, minus, plus);
    return cohomology_c2(a, -n - 1);
}

bool homology_class_equal(const InvolutiveAbelianGroup& a, int n, const IntVector& x, const IntVector& y)
{
    const IntMatrix cycles = column_basis(cycle_lattice_c2(a, n));
    if (!lattice_contains(cycles, x) || !lattice_contains(cycles, y))
        throw std::invalid_argument("homology_class_equal: argument is not a cycle");
    IntVector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        d[i] = x[i] - y[i];
    return in_lattice(boundary_lattice_c2(a, n), d);
}

Parity parity_of(long long d) { return (d % 2 == 0) ? Parity::even : Parity::odd; }

int sign_of(Parity p) { return p == Parity::even ? 1 : -1; }

bool DoubleSubgroup::contains(const InvolutiveAbelianGroup& a, const IntVector& x) const
{
    return in_lattice(generators.hstack(a.relations()), x);
}

DoubleSubgroup double_subgroup(const InvolutiveAbelianGroup& a, Parity d_parity)
{
    DoubleSubgroup d;
    d.generators = identity_plus(a.involution(), sign_of(d_parity));
    const IntMatrix span = d.generators.hstack(a.relations());
    d.iso_type = subquotient(span, a.relations());
    d.quotient = cokernel(span);
    return d;
}

}  // namespace hcob
