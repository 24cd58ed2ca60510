#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcob/int_matrix.hpp"

namespace hcob {

/// Isomorphism type of a finitely generated abelian group: torsion invariant
/// factors in divisibility order, then one 0 per free summand.
class FgAbGroup {
public:
    FgAbGroup() = default;
    /// Accepts any list of cyclic orders (0 = Z); normalizes to invariant factors.
    explicit FgAbGroup(const std::vector<BigInt>& cyclic_orders);
    static FgAbGroup from_ints(const std::vector<long long>& cyclic_orders);
    static FgAbGroup trivial() { return FgAbGroup(); }

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const;
    bool is_trivial() const { return factors_.empty(); }
    bool is_finite() const { return free_rank() == 0; }
    /// Order of the group; throws std::domain_error if infinite.
    BigInt order() const;
    /// Elementary divisors (prime powers) of the torsion part, ascending.
    std::vector<BigInt> elementary_divisors() const;

    /// "0", "Z", "Z/2 + Z/2", "Z/3 + Z^2".
    std::string to_string() const;

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) = default;
    friend FgAbGroup cokernel(const IntMatrix& m);

private:
    std::vector<BigInt> factors_;
};

/// Z^rows / (column span of m).
FgAbGroup cokernel(const IntMatrix& m);

/// K / I for lattices given by generating columns, I contained in K.
/// Throws std::invalid_argument if some generator of I is not in K.
FgAbGroup subquotient(const IntMatrix& k_gens, const IntMatrix& i_gens);

/// Finitely generated abelian group Z^g / R with an endomorphism T, T^2 = 1 modulo R.
class InvolutiveAbelianGroup {
public:
    /// relations: g x r (columns are relators); involution: g x g.
    /// Throws std::invalid_argument if T does not preserve R or T^2 != 1 on the quotient.
    InvolutiveAbelianGroup(std::size_t generators, IntMatrix relations, IntMatrix involution);

    /// Z/m with t.a = sign * a (m = 0 gives Z).
    static InvolutiveAbelianGroup cyclic(long long m, int sign);
    /// Direct sum of cyclic groups, all with the same sign action.
    static InvolutiveAbelianGroup sum_of_cyclic(const std::vector<long long>& orders, int sign);
    static InvolutiveAbelianGroup free(std::size_t rank, int sign);
    static InvolutiveAbelianGroup zero();

    std::size_t generator_count() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    const IntMatrix& involution() const { return involution_; }

    FgAbGroup underlying() const;
    bool is_finite() const { return underlying().is_finite(); }

    /// Same group with the action replaced by sign * T.
    InvolutiveAbelianGroup with_sign(int sign) const;

    /// Whether x - y lies in the relation lattice.
    bool equal_elements(const IntVector& x, const IntVector& y) const;
    IntVector act(const IntVector& x) const { return involution_.apply(x); }

private:
    std::size_t generators_;
    IntMatrix relations_;
    IntMatrix involution_;
};

/// H_n(C_2; A) for n >= 0 using the periodic resolution with d_n = 1 + (-1)^n T.
FgAbGroup homology_c2(const InvolutiveAbelianGroup& a, int n);

/// H^n(C_2; A) for n >= 0, from the dual periodic cochain complex.
FgAbGroup cohomology_c2(const InvolutiveAbelianGroup& a, int n);

/// Tate homology: homology for n >= 1, the norm-sequence subquotients at n = 0, -1,
/// and cohomology H^{-n-1} for n <= -2.
FgAbGroup tate_homology_c2(const InvolutiveAbelianGroup& a, int n);

/// Lattice of degree-n boundaries im(d_{n+1}) together with the relations, as columns.
IntMatrix boundary_lattice_c2(const InvolutiveAbelianGroup& a, int n);
/// Lattice of degree-n cycles ker(d_n) (everything when n = 0), containing the relations.
IntMatrix cycle_lattice_c2(const InvolutiveAbelianGroup& a, int n);

/// Whether two degree-n cycles represent the same class in H_n(C_2; A).
bool homology_class_equal(const InvolutiveAbelianGroup& a, int n, const IntVector& x, const IntVector& y);

enum class Parity { even, odd };
Parity parity_of(long long d);
int sign_of(Parity p);

/// Image of 1 + (-1)^d B, where B is the stored involution read as the algebraic bar map.
struct DoubleSubgroup {
    /// Generators as columns in the presentation coordinates.
    IntMatrix generators;
    /// Isomorphism type of the subgroup (image of generators in A).
    FgAbGroup iso_type;
    /// A / D.
    FgAbGroup quotient;

    bool contains(const InvolutiveAbelianGroup& a, const IntVector& x) const;
};

DoubleSubgroup double_subgroup(const InvolutiveAbelianGroup& a, Parity d_parity);

}  // namespace hcob
