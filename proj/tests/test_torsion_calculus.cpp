#include <gtest/gtest.h>

#include <stdexcept>

#include "hcob/abelian_group.hpp"
#include "hcob/lens_space.hpp"
#include "hcob/torsion_calculus.hpp"
#include "support/generators.hpp"

using namespace hcob;

namespace {

const WhiteheadClass kU(theorem_a_unit());

GroupRingElement gr(std::size_t n, std::initializer_list<long long> c) { return GroupRingElement::from_ints(n, c); }

std::vector<WhiteheadClass> c7_generators() { return {kU, kU.twisted(2)}; }
std::vector<WhiteheadClass> c5_generators() { return {WhiteheadClass(gr(5, {1, -1, 0, 0, -1}))}; }

HCobordismSymbol random_symbol(gen::Rng& rng, const std::vector<WhiteheadClass>& gens, long long d)
{
    const auto n = static_cast<long long>(gens.front().order());
    return HCobordismSymbol(d, gen::unit(rng, gens, 2), gen::unit_mod(rng, n));
}

const std::vector<WhiteheadClass>& pick_family(gen::Rng& rng)
{
    static const auto c5 = c5_generators();
    static const auto c7 = c7_generators();
    return rng.coin() ? c5 : c7;
}

IntVector random_vector(gen::Rng& rng, std::size_t g, long long bound)
{
    IntVector v(g, BigInt(0));
    for (auto& x : v)
        x = rng.uniform(-bound, bound);
    return v;
}

IntVector subtract(const IntVector& a, const IntVector& b)
{
    IntVector out(a);
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] -= b[k];
    return out;
}

/// Random automorphism commuting with the involution: +-1 or +-the involution itself.
IntMatrix random_h(gen::Rng& rng, const InvolutiveAbelianGroup& wh)
{
    const IntMatrix base = rng.coin() ? IntMatrix::identity(wh.generator_count()) : wh.involution();
    return BigInt(rng.sign()) * base;
}

}  // namespace

TEST(TorsionCalculus, ConstructionChecksTwist)
{
    EXPECT_THROW(HCobordismSymbol(5, kU, 7), std::invalid_argument);
    EXPECT_THROW(HCobordismSymbol(5, kU, 1, OrientationCharacter{-1}), std::invalid_argument);
    EXPECT_EQ(HCobordismSymbol(5, kU, 9).twist(), 2);
    EXPECT_EQ(HCobordismSymbol(5, kU, 3).inverse_twist(), 5);
}

TEST(TorsionCalculus, CompositionWithProductIsNeutral)
{
    const HCobordismSymbol w(5, kU, 3);
    const auto id = HCobordismSymbol::trivial(7, 5);
    EXPECT_TRUE(symbol_equal(compose(w, id), w));
    EXPECT_TRUE(symbol_equal(compose(id, w), w));
    EXPECT_THROW(compose(w, HCobordismSymbol::trivial(7, 6)), std::invalid_argument);
    EXPECT_THROW(compose(w, HCobordismSymbol::trivial(5, 5)), std::invalid_argument);
}

TEST(TorsionCalculus, CompositionSubstitutesThroughTheTwist)
{
    // first has twist 2, so the second torsion is pulled back by t -> t^4.
    const HCobordismSymbol first(5, kU, 2);
    const HCobordismSymbol second(5, kU, 1);
    const auto c = compose(first, second);
    EXPECT_EQ(c.twist(), 2);
    EXPECT_TRUE(wh_class_equal(c.torsion(), WhiteheadClass(theorem_a_unit() * galois_twist(theorem_a_unit(), 4))));
}

TEST(TorsionCalculus, DoubleTorsionExample)
{
    const HCobordismSymbol even(6, kU, 1);
    const auto d = double_of(even);
    EXPECT_EQ(d.twist(), 1);
    EXPECT_TRUE(wh_class_equal(d.torsion(), WhiteheadClass(theorem_a_unit() * involution(theorem_a_unit()))));
    EXPECT_FALSE(wh_class_equal(d.torsion(), WhiteheadClass::identity(7)));
}

TEST(TorsionCalculus, ReverseExamples)
{
    EXPECT_TRUE(symbol_equal(reverse(HCobordismSymbol::trivial(7, 4)), HCobordismSymbol::trivial(7, 4)));
    const auto cyl = HCobordismSymbol::mapping_cylinder(7, 4, 3);
    const auto r = reverse(cyl);
    EXPECT_EQ(r.twist(), 5);
    EXPECT_TRUE(wh_class_equal(r.torsion(), WhiteheadClass::identity(7)));
    // Odd dimension with trivial orientation: the reverse carries the inverse class, pushed forward.
    const HCobordismSymbol w(5, kU, 3);
    EXPECT_TRUE(wh_class_equal(reverse(w).torsion(), w.push(kU.inverted())));
}

TEST(TorsionCalculus, InertialTwistExamples)
{
    const HCobordismSymbol w(11, kU, 1);
    for (const long long i : {1LL, 6LL}) {
        const auto v = inertial_twist(w, i);
        EXPECT_EQ(v.twist(), mod_inverse(i, 7));
        EXPECT_TRUE(wh_class_equal(v.torsion(), WhiteheadClass::identity(7))) << "i=" << i;
    }
    const auto v2 = inertial_twist(w, 2);
    EXPECT_FALSE(wh_class_equal(v2.torsion(), WhiteheadClass::identity(7)));
    EXPECT_TRUE(wh_class_equal(v2.torsion(), inertial_torsion_closed_form(w, 2)));
    EXPECT_THROW(inertial_twist(w, 7), std::invalid_argument);
}

TEST(TorsionCalculus, BasepointChangeExamples)
{
    const auto z2 = InvolutiveAbelianGroup::free(2, 1);
    BasepointChangeData in{z2, IntMatrix::identity(2), IntVector{0, 0}, IntVector{3, -1}, 2, 5};
    EXPECT_EQ(basepoint_change_torsion(in), (IntVector{3, -1}));

    // tau(V) = 0, n even, d odd, trivial involution: the output is -2 h tau, a boundary.
    in.tau_w = IntVector{1, 4};
    in.tau_v = IntVector{0, 0};
    EXPECT_EQ(basepoint_change_torsion(in), (IntVector{-2, -8}));
    EXPECT_TRUE(homology_class_equal(whitehead_module(z2, in.d), 1, basepoint_change_torsion(in), in.tau_v));

    // n = 3: the simplex boundary is a 2-sphere with chi = 2.
    in.n = 3;
    EXPECT_EQ(basepoint_change_stepwise(in), basepoint_change_torsion(in));

    in.n = 1;
    EXPECT_THROW(basepoint_change_torsion(in), std::invalid_argument);
    EXPECT_THROW(basepoint_change_stepwise(in), std::invalid_argument);
}

TEST(TorsionCalculus, BasepointChangeUnitTrivialCobordism)
{
    const auto id = HCobordismSymbol::mapping_cylinder(7, 5, 3);
    EXPECT_TRUE(wh_class_equal(basepoint_change_unit(id, kU, 2), kU.twisted(3)));
    EXPECT_THROW(basepoint_change_unit(id, kU, 1), std::invalid_argument);
}

// Properties.

TEST(TorsionCalculusProperty, CompositionIsAssociative)
{
    gen::Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const auto& gens = pick_family(rng);
        const long long d = rng.uniform(3, 14);
        const auto a = random_symbol(rng, gens, d);
        const auto b = random_symbol(rng, gens, d);
        const auto c = random_symbol(rng, gens, d);
        EXPECT_TRUE(symbol_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
}

TEST(TorsionCalculusProperty, ReverseIsAnInvolution)
{
    gen::Rng rng(102);
    for (int trial = 0; trial < 150; ++trial) {
        const auto w = random_symbol(rng, pick_family(rng), rng.uniform(3, 14));
        EXPECT_TRUE(symbol_equal(reverse(reverse(w)), w));
        // W followed by its reverse is a double, with identity twist.
        EXPECT_EQ(double_of(w).twist(), 1);
    }
}

TEST(TorsionCalculusProperty, DoubleTorsionClosedForm)
{
    gen::Rng rng(103);
    for (int trial = 0; trial < 150; ++trial) {
        const long long d = rng.uniform(3, 14);
        const auto w = random_symbol(rng, pick_family(rng), d);
        const auto& u = w.torsion();
        const auto bar = u.conjugated();
        const auto expected = u * (d % 2 == 0 ? bar : bar.inverted());
        EXPECT_TRUE(wh_class_equal(double_of(w).torsion(), expected));
        // The double of the reverse is the pushed-forward double.
        EXPECT_TRUE(wh_class_equal(double_of(reverse(w)).torsion(), w.push(double_of(w).torsion())));
        if (d % 2 == 1) {
            EXPECT_TRUE(wh_class_equal(double_of(w).torsion(), WhiteheadClass::identity(w.order())));
        }
    }
}

TEST(TorsionCalculusProperty, InertialTwistMatchesClosedForm)
{
    gen::Rng rng(104);
    for (int trial = 0; trial < 150; ++trial) {
        const auto& gens = pick_family(rng);
        const auto w = random_symbol(rng, gens, rng.uniform(3, 14));
        const long long i = gen::unit_mod(rng, static_cast<long long>(w.order()));
        const auto v = inertial_twist(w, i);
        EXPECT_TRUE(wh_class_equal(v.torsion(), inertial_torsion_closed_form(w, i)));
        // With the identity in the middle, V is the pushed-forward double of W.
        if (i == 1) {
            EXPECT_TRUE(wh_class_equal(v.torsion(), w.push(double_of(w).torsion())));
        }
    }
}

TEST(TorsionCalculusProperty, DoubleLandsInTheDoubleSubgroup)
{
    // Additive model: Z^r with the bar map given by a random commuting involution.
    gen::Rng rng(105);
    for (int trial = 0; trial < 200; ++trial) {
        const auto wh = gen::involutive_group(rng);
        const long long d = rng.uniform(3, 14);
        const auto tau = random_vector(rng, wh.generator_count(), 20);
        // tau + (-1)^d conj(tau)
        const auto bar = wh.involution().apply(tau);
        IntVector dbl(tau);
        for (std::size_t k = 0; k < tau.size(); ++k)
            dbl[k] += (d % 2 == 0 ? 1 : -1) * bar[k];
        EXPECT_TRUE(double_subgroup(wh, parity_of(d)).contains(wh, dbl));
    }
}

TEST(TorsionCalculusProperty, BasepointChangeStepwiseMatchesClosedForm)
{
    gen::Rng rng(106);
    for (int trial = 0; trial < 300; ++trial) {
        const auto wh = gen::involutive_group(rng);
        const std::size_t g = wh.generator_count();
        BasepointChangeData in{wh, random_h(rng, wh), random_vector(rng, g, 20), random_vector(rng, g, 20),
                               static_cast<int>(rng.uniform(2, kMaxAmbient)), rng.uniform(3, 14)};
        const auto stepwise = basepoint_change_stepwise(in);
        const auto closed = basepoint_change_torsion(in);
        EXPECT_TRUE(wh.equal_elements(stepwise, closed)) << "n=" << in.n << " d=" << in.d;
    }
}

TEST(TorsionCalculusProperty, BasepointChangeDependsOnCobordismOnlyThroughDoubles)
{
    gen::Rng rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        const auto wh = gen::involutive_group(rng);
        const std::size_t g = wh.generator_count();
        BasepointChangeData in{wh, random_h(rng, wh), random_vector(rng, g, 20), random_vector(rng, g, 20),
                               static_cast<int>(rng.uniform(2, 4)), rng.uniform(3, 14)};
        const auto before = basepoint_change_torsion(in);
        auto moved = in;
        moved.tau_w = random_vector(rng, g, 20);
        const auto diff = subtract(basepoint_change_torsion(moved), before);
        EXPECT_TRUE(double_subgroup(wh, parity_of(in.d + in.n - 1)).contains(wh, diff));
    }
}

TEST(TorsionCalculusProperty, BasepointChangeSquareCommutes)
{
    gen::Rng rng(108);
    for (int trial = 0; trial < 300; ++trial) {
        const auto wh = gen::involutive_group(rng);
        const std::size_t g = wh.generator_count();
        const long long d = rng.uniform(3, 14);
        const int n = static_cast<int>(rng.uniform(2, 4));
        // tau(V) must be a cycle in degree n-1.
        const IntMatrix cycles = cycle_lattice_c2(whitehead_module(wh, d), n - 1);
        IntVector tau_v(g, BigInt(0));
        for (std::size_t c = 0; c < cycles.cols(); ++c) {
            const BigInt k = rng.uniform(-3, 3);
            for (std::size_t r = 0; r < g; ++r)
                tau_v[r] += k * cycles.at(r, c);
        }
        const BasepointChangeData in{wh, random_h(rng, wh), random_vector(rng, g, 20), tau_v, n, d};
        EXPECT_TRUE(basepoint_change_square_commutes(in));
    }
}

TEST(TorsionCalculusProperty, BasepointChangeUnitMatchesAdditiveShape)
{
    // With tau(V) trivial, n = 2 and d odd the output is the inverse of h_*(tau) conj(h_*(tau)).
    gen::Rng rng(109);
    const auto gens = c7_generators();
    for (int trial = 0; trial < 100; ++trial) {
        const long long d = 2 * rng.uniform(2, 6) + 1;
        const auto w = random_symbol(rng, gens, d);
        const auto out = basepoint_change_unit(w, WhiteheadClass::identity(7), 2);
        const auto ht = w.push(w.torsion());
        const auto expected = (ht * ht.conjugated()).inverted();
        EXPECT_TRUE(wh_class_equal(out, expected));
    }
}
