#pragma once

#include <cstddef>

#include "hcob/abelian_group.hpp"
#include "hcob/group_ring.hpp"

namespace hcob {

/// An h-cobordism W: M -> M' over pi = C_n, reduced to the data the torsion formulas use:
/// the dimension of M, the torsion tau(W, M) as a unit class, and the identification
/// h^W_* of fundamental groups, recorded as t -> t^twist.
///
/// Whitehead values are written multiplicatively. A sum of torsions is a product of
/// units, a negative multiple is an inverse, and the involution reverses coefficients.
class HCobordismSymbol {
public:
    /// Throws std::invalid_argument unless twist is a unit mod n and w is valid on C_n.
    HCobordismSymbol(long long d, WhiteheadClass torsion, long long twist, OrientationCharacter w = {});

    /// The product cobordism M x I.
    static HCobordismSymbol trivial(std::size_t order, long long d, OrientationCharacter w = {});
    /// Mapping cylinder of a diffeomorphism acting on pi_1 by t -> t^i; it is an s-cobordism.
    static HCobordismSymbol mapping_cylinder(std::size_t order, long long d, long long i, OrientationCharacter w = {});

    long long dim() const { return d_; }
    Parity parity() const { return parity_of(d_); }
    const WhiteheadClass& torsion() const { return torsion_; }
    long long twist() const { return twist_; }
    OrientationCharacter orientation() const { return w_; }
    std::size_t order() const { return torsion_.order(); }

    /// Twist of the inverse identification.
    long long inverse_twist() const;
    /// h^W_* applied to a class.
    WhiteheadClass push(const WhiteheadClass& x) const { return x.twisted(twist_); }
    /// (h^W_*)^{-1} applied to a class.
    WhiteheadClass pull(const WhiteheadClass& x) const { return x.twisted(inverse_twist()); }

private:
    long long d_;
    WhiteheadClass torsion_;
    long long twist_;
    OrientationCharacter w_;
};

/// Symbols agree in dimension and twist and their torsions are equal classes.
bool symbol_equal(const HCobordismSymbol& a, const HCobordismSymbol& b);

/// second o first, i.e. first followed by second:
/// tau = tau(first) + (h^first)^{-1}_* tau(second), twists compose.
/// Throws std::invalid_argument on a dimension, order or orientation mismatch.
HCobordismSymbol compose(const HCobordismSymbol& first, const HCobordismSymbol& second);

/// The same cobordism read from M': tau(W, M') = (-1)^d h^W_* conj(tau(W, M)), twist inverted.
HCobordismSymbol reverse(const HCobordismSymbol& w);

/// D(W) = reverse(W) o W, with torsion tau + (-1)^d conj(tau).
HCobordismSymbol double_of(const HCobordismSymbol& w);

/// V = W o M_{phi^{-1}} o reverse(W) for the diffeomorphism phi acting by t -> t^i,
/// where W runs from L to M. An inertial h-cobordism of M.
HCobordismSymbol inertial_twist(const HCobordismSymbol& w, long long i);

/// Closed form of the inertial torsion: h^W_*(phi_* u + (-1)^d conj(u)).
WhiteheadClass inertial_torsion_closed_form(const HCobordismSymbol& w, long long i);

/// Basepoint change of an n-cycle V over L along an h-cobordism W: L -> M, in an additive
/// model of Wh(L) = Wh(M): a group with the algebraic bar map as its stored involution and
/// h^W_* given as an automorphism commuting with it.
struct BasepointChangeData {
    InvolutiveAbelianGroup wh;
    IntMatrix h;
    IntVector tau_w;
    IntVector tau_v;
    int n = 2;
    long long d = 1;
};

/// Assembled from the three torsions of the factorization M -> W -> P -> W#V, using
/// chi of the boundary of the n-simplex from simplicial_complex.
/// Throws std::invalid_argument if n < 2 or n exceeds the ambient cap of simplicial_complex.
IntVector basepoint_change_stepwise(const BasepointChangeData& in);

/// h_* tau(V, L) + (-1)^{n-1}(h_* tau + (-1)^{d+n-1} conj(h_* tau)). Throws std::invalid_argument if n < 2.
IntVector basepoint_change_torsion(const BasepointChangeData& in);

/// Wh with the action t.x = (-1)^{d-1} conj(x).
InvolutiveAbelianGroup whitehead_module(const InvolutiveAbelianGroup& wh, long long d);

/// Whether the class of the output in H_{n-1}(C_2; Wh) equals h_* of the class of tau(V, L).
/// tau(V, L) must be a cycle there.
bool basepoint_change_square_commutes(const BasepointChangeData& in);

/// Multiplicative form for Wh(C_n): W given as a symbol, tau(V, L) as a unit class.
WhiteheadClass basepoint_change_unit(const HCobordismSymbol& w, const WhiteheadClass& tau_v, int n);

}  // namespace hcob
