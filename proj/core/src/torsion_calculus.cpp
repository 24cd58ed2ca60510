#include "hcob/torsion_calculus.hpp"

#include <stdexcept>
#include <utility>

#include "hcob/simplicial_complex.hpp"

namespace hcob {

namespace {

WhiteheadClass signed_power(const WhiteheadClass& x, int sign) { return sign > 0 ? x : x.inverted(); }

int minus_one_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

void require_compatible(const HCobordismSymbol& a, const HCobordismSymbol& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("h-cobordisms of different dimensions");
    if (a.order() != b.order())
        throw std::invalid_argument("h-cobordisms over different fundamental groups");
    if (a.orientation().sign_of_generator != b.orientation().sign_of_generator)
        throw std::invalid_argument("h-cobordisms with different orientation characters");
}

}  // namespace

HCobordismSymbol::HCobordismSymbol(long long d, WhiteheadClass torsion, long long twist, OrientationCharacter w)
    : d_(d), torsion_(std::move(torsion)), twist_(0), w_(w)
{
    const auto n = static_cast<long long>(torsion_.order());
    w_.validate(torsion_.order());
    twist_ = mod_floor(twist, n);
    if (mod_inverse(twist_, n) == 0 && n > 1)
        throw std::invalid_argument("twist must be a unit modulo the group order");
    if (n == 1)
        twist_ = 0;
}

HCobordismSymbol HCobordismSymbol::trivial(std::size_t order, long long d, OrientationCharacter w)
{
    return HCobordismSymbol(d, WhiteheadClass::identity(order), 1, w);
}

HCobordismSymbol HCobordismSymbol::mapping_cylinder(std::size_t order, long long d, long long i, OrientationCharacter w)
{
    return HCobordismSymbol(d, WhiteheadClass::identity(order), i, w);
}

long long HCobordismSymbol::inverse_twist() const
{
    const auto n = static_cast<long long>(order());
    return n == 1 ? 0 : mod_inverse(twist_, n);
}

bool symbol_equal(const HCobordismSymbol& a, const HCobordismSymbol& b)
{
    return a.dim() == b.dim() && a.order() == b.order() && a.twist() == b.twist() &&
           wh_class_equal(a.torsion(), b.torsion());
}

HCobordismSymbol compose(const HCobordismSymbol& first, const HCobordismSymbol& second)
{
    require_compatible(first, second);
    const auto n = static_cast<long long>(first.order());
    const WhiteheadClass tau = first.torsion() * first.pull(second.torsion());
    return HCobordismSymbol(first.dim(), tau, (first.twist() * second.twist()) % n, first.orientation());
}

HCobordismSymbol reverse(const HCobordismSymbol& w)
{
    const WhiteheadClass tau = signed_power(w.push(w.torsion().conjugated(w.orientation())), minus_one_pow(w.dim()));
    return HCobordismSymbol(w.dim(), tau, w.inverse_twist(), w.orientation());
}

HCobordismSymbol double_of(const HCobordismSymbol& w) { return compose(w, reverse(w)); }

HCobordismSymbol inertial_twist(const HCobordismSymbol& w, long long i)
{
    const auto n = static_cast<long long>(w.order());
    if (n > 1 && mod_inverse(mod_floor(i, n), n) == 0)
        throw std::invalid_argument("automorphism label must be a unit modulo the group order");
    const long long i_inv = n == 1 ? 0 : mod_inverse(mod_floor(i, n), n);
    const auto cyl = HCobordismSymbol::mapping_cylinder(w.order(), w.dim(), i_inv, w.orientation());
    return compose(compose(reverse(w), cyl), w);
}

WhiteheadClass inertial_torsion_closed_form(const HCobordismSymbol& w, long long i)
{
    const WhiteheadClass& u = w.torsion();
    return w.push(u.twisted(i) * signed_power(u.conjugated(w.orientation()), minus_one_pow(w.dim())));
}

InvolutiveAbelianGroup whitehead_module(const InvolutiveAbelianGroup& wh, long long d)
{
    return wh.with_sign(minus_one_pow(d - 1));
}

namespace {

void validate(const BasepointChangeData& in)
{
    if (in.n < 2)
        throw std::invalid_argument("basepoint change needs n >= 2 so that the boundary sphere is connected");
    const std::size_t g = in.wh.generator_count();
    if (in.h.rows() != g || in.h.cols() != g || in.tau_w.size() != g || in.tau_v.size() != g)
        throw std::invalid_argument("basepoint change data of inconsistent size");
    const IntMatrix& r = in.wh.relations();
    const IntVector zero(g, BigInt(0));
    for (std::size_t j = 0; j < r.cols(); ++j)
        if (!in.wh.equal_elements(in.h.apply(r.column(j)), zero))
            throw std::invalid_argument("h does not preserve the relations");
}

IntVector combine(const std::vector<std::pair<BigInt, IntVector>>& terms, std::size_t g)
{
    IntVector out(g, BigInt(0));
    for (const auto& [c, v] : terms)
        for (std::size_t k = 0; k < g; ++k)
            out[k] += c * v[k];
    return out;
}

}  // namespace

IntVector basepoint_change_stepwise(const BasepointChangeData& in)
{
    validate(in);
    const std::size_t g = in.wh.generator_count();
    const IntMatrix& bar = in.wh.involution();
    // tau(W, M) = (-1)^d h_* conj(tau).
    const IntVector step_w = in.h.apply(bar.apply(in.tau_w));
    // tau(P, W), pulled back to M.
    const IntVector step_p = in.h.apply(in.tau_v);
    // tau(W#V, P) = (chi(boundary of the n-simplex) - 1) tau, pulled back to M.
    const int chi = simplex_boundary(in.n).euler_characteristic();
    const IntVector step_glue = in.h.apply(in.tau_w);
    return combine({{BigInt(minus_one_pow(in.d)), step_w}, {BigInt(1), step_p}, {BigInt(chi - 1), step_glue}}, g);
}

IntVector basepoint_change_torsion(const BasepointChangeData& in)
{
    validate(in);
    const std::size_t g = in.wh.generator_count();
    const IntVector ht = in.h.apply(in.tau_w);
    const IntVector bar_ht = in.wh.involution().apply(ht);
    const int outer = minus_one_pow(in.n - 1);
    const int inner = minus_one_pow(in.d + in.n - 1);
    return combine({{BigInt(1), in.h.apply(in.tau_v)}, {BigInt(outer), ht}, {BigInt(outer * inner), bar_ht}}, g);
}

bool basepoint_change_square_commutes(const BasepointChangeData& in)
{
    const InvolutiveAbelianGroup module = whitehead_module(in.wh, in.d);
    return homology_class_equal(module, in.n - 1, basepoint_change_torsion(in), in.h.apply(in.tau_v));
}

WhiteheadClass basepoint_change_unit(const HCobordismSymbol& w, const WhiteheadClass& tau_v, int n)
{
    if (n < 2)
        throw std::invalid_argument("basepoint change needs n >= 2 so that the boundary sphere is connected");
    const WhiteheadClass ht = w.push(w.torsion());
    const WhiteheadClass correction = ht * signed_power(ht.conjugated(w.orientation()), minus_one_pow(w.dim() + n - 1));
    return w.push(tau_v) * signed_power(correction, minus_one_pow(n - 1));
}

}  // namespace hcob
