#include "hcob/lens_space.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hcob/abelian_group.hpp"
#include "hcob/torsion_calculus.hpp"

namespace hcob {

LensSpace::LensSpace(long long p, std::vector<long long> weights) : p_(p), weights_(std::move(weights))
{
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("lens spaces need an odd prime order");
    if (weights_.empty())
        throw std::invalid_argument("a lens space needs at least one weight");
    for (auto& r : weights_) {
        r = mod_floor(r, p);
        if (r == 0)
            throw std::invalid_argument("weights must be nonzero modulo p");
    }
}

LensSpace LensSpace::balanced(long long p, long long k)
{
    if (k < 1)
        throw std::invalid_argument("multiplicity must be positive");
    std::vector<long long> w;
    for (long long r = 1; r < p; ++r)
        for (long long c = 0; c < k; ++c)
            w.push_back(r);
    return LensSpace(p, std::move(w));
}

std::string LensSpace::to_string() const
{
    std::ostringstream out;
    out << "L^" << dimension() << "_" << p_ << "(";
    for (std::size_t j = 0; j < weights_.size(); ++j)
        out << (j ? ":" : "") << weights_[j];
    out << ")";
    return out.str();
}

RTorsion reidemeister_torsion(const LensSpace& l)
{
    const long long p = l.prime();
    CyclotomicElement x = CyclotomicElement::one(p);
    for (long long r : l.weights())
        x *= CyclotomicElement::zeta_power(p, r) - CyclotomicElement::one(p);
    return RTorsion{std::move(x)};
}

std::optional<TrivialUnitWitness> rt_equivalence_witness(const RTorsion& x, const RTorsion& y)
{
    const long long p = x.value.prime();
    if (p != y.value.prime())
        throw std::invalid_argument("torsions over different cyclotomic fields");
    for (long long k = 0; k < p; ++k) {
        const CyclotomicElement shifted = CyclotomicElement::zeta_power(p, k) * y.value;
        if (x.value == shifted)
            return TrivialUnitWitness{1, static_cast<std::size_t>(k)};
        if (x.value == -shifted)
            return TrivialUnitWitness{-1, static_cast<std::size_t>(k)};
    }
    return std::nullopt;
}

bool rt_equivalent(const RTorsion& x, const RTorsion& y) { return rt_equivalence_witness(x, y).has_value(); }

std::vector<HomotopyAutomorphism> homotopy_auto_image(const LensSpace& l)
{
    const long long p = l.prime();
    std::vector<HomotopyAutomorphism> out;
    for (long long i = 1; i < p; ++i) {
        long long power = 1;
        for (std::size_t e = 0; e < l.n(); ++e)
            power = power * i % p;
        if (power == 1)
            out.push_back({i, 1});
        else if (power == p - 1)
            out.push_back({i, -1});
    }
    return out;
}

bool is_simple_auto(const LensSpace& l, long long i)
{
    const long long r = mod_floor(i, l.prime());
    bool realizable = false;
    for (const auto& h : homotopy_auto_image(l))
        realizable = realizable || h.i == r;
    if (!realizable)
        throw std::invalid_argument("t -> t^" + std::to_string(i) + " is not realized by a homotopy equivalence of " +
                                    l.to_string());
    const RTorsion delta = reidemeister_torsion(l);
    return rt_equivalent(RTorsion{delta.value.galois(r)}, delta);
}

InertiaSet inertia_set(const LensSpace& l, const WhiteheadClass& u)
{
    if (static_cast<long long>(u.order()) != l.prime())
        throw std::invalid_argument("the unit must live in Z[C_p] for the lens space order p");
    InertiaSet out;
    for (const auto& h : homotopy_auto_image(l)) {
        if (!is_simple_auto(l, h.i))
            continue;
        const WhiteheadClass v = u.twisted(h.i) * u.inverted();
        bool found = false;
        for (auto& c : out.classes)
            if (wh_class_equal(c.value, v)) {
                c.labels.push_back(h.i);
                found = true;
                break;
            }
        if (!found)
            out.classes.push_back(InertiaClass{v, {h.i}});
    }
    return out;
}

InertiaSet inertia_set(const LensSpace& l, const GroupRingElement& u)
{
    return inertia_set(l, WhiteheadClass(u));
}

GroupRingElement theorem_a_unit() { return GroupRingElement::from_ints(7, {2, 2, 0, -1, -1, -1, 0}); }

GroupRingElement theorem_a_unit_inverse() { return GroupRingElement::from_ints(7, {1, -2, 3, -3, 3, -2, 1}); }

namespace {

std::string join_labels(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string witness_string(const TrivialUnitWitness& w)
{
    return std::string(w.sign < 0 ? "-" : "") + "t^" + std::to_string(w.power);
}

}  // namespace

ReportDocument theorem_a_report(long long k, const std::optional<GroupRingElement>& unit_override)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    const long long d = 12 * k - 1;
    const GroupRingElement u = unit_override.value_or(theorem_a_unit());
    ReportDocument r("lens report-theorem-a",
                     {{"k", std::to_string(k)}, {"d", std::to_string(d)}, {"unit", u.to_string()}});

    // Unit verification.
    if (u.order() != 7) {
        r.add("unit verification", "torsion u of W in Z[C_7]", StageStatus::failed,
              {{"unit", u.to_string()}, {"reason", "not an element of Z[C_7]"}});
        return r;
    }
    const auto inv = invert_unit(u);
    if (!inv) {
        r.add("unit verification", "torsion u of W in Z[C_7]", StageStatus::failed,
              {{"unit", u.to_string()}, {"reason", "not a unit"}});
        return r;
    }
    {
        Witness w{{"unit", u.to_string()}, {"inverse", inv->to_string()}, {"product", (u * *inv).to_string()}};
        bool ok = u * *inv == GroupRingElement::one(7);
        if (!unit_override) {
            ok = ok && *inv == theorem_a_unit_inverse();
            w.emplace_back("expected_inverse", theorem_a_unit_inverse().to_string());
        }
        r.add("unit verification", "torsion u of W in Z[C_7]", ok ? StageStatus::verified : StageStatus::failed,
              std::move(w));
    }
    const WhiteheadClass uc(u);

    // Homotopy automorphisms.
    const LensSpace l = LensSpace::balanced(7, k);
    const auto image = homotopy_auto_image(l);
    {
        std::vector<long long> labels;
        bool preserving = true;
        for (const auto& h : image) {
            labels.push_back(h.i);
            preserving = preserving && h.sign == 1;
        }
        r.add("Im gamma = (Z/7)^x", "homotopy classification of self-equivalences of L",
              image.size() == 6 && preserving ? StageStatus::verified : StageStatus::failed,
              {{"lens_space", l.to_string()}, {"image", join_labels(labels)},
               {"orientation", preserving ? "all preserving" : "mixed"}});
    }
    r.assume("homotopy-automorphisms-lens", "image of pi_0 hAut(L) in Aut(pi_1 L)");

    // Simpleness via Reidemeister torsion.
    {
        std::vector<long long> simple;
        for (const auto& h : image)
            if (is_simple_auto(l, h.i))
                simple.push_back(h.i);
        r.add("every realizable automorphism is simple", "R-torsion of L is Galois invariant",
              simple.size() == image.size() ? StageStatus::verified : StageStatus::failed,
              {{"prod (z^j - 1), j = 1..6", reidemeister_torsion(LensSpace(7, {1, 2, 3, 4, 5, 6})).value.to_string()},
               {"multiplicity", std::to_string(k)},
               {"simple", join_labels(simple)}});
    }
    r.assume("diff-to-saut-surjective", "simple self-equivalences are realized by diffeomorphisms");

    // phi_6 fixes u.
    {
        const auto w = wh_class_witness(uc.twisted(6), uc);
        r.add("phi_6(u) ~ u", "the Galois twist by 6 fixes the class of u",
              w ? StageStatus::verified : StageStatus::failed,
              {{"phi_6(u)", galois_twist(u, 6).to_string()},
               {"quotient", w ? witness_string(*w) : std::string("not a trivial unit")}});
    }

    // Inertia classes.
    r.assume("sk1-cyclic-prime", "Whitehead classes of Z[C_7] are unit classes");
    const InertiaSet inertia = inertia_set(l, uc);
    {
        bool distinct = true;
        const std::vector<WhiteheadClass> reps{WhiteheadClass::identity(7), uc.twisted(2) * uc.inverted(),
                                               uc.twisted(3) * uc.inverted()};
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
                distinct = distinct && !wh_class_equal(reps[a], reps[b]);
        Witness w{{"1", "1"},
                  {"phi_2(u)/u", reps[1].representative().to_string()},
                  {"phi_3(u)/u", reps[2].representative().to_string()},
                  {"N", std::to_string(inertia.cardinality())}};
        r.add("1, phi_2(u)/u, phi_3(u)/u pairwise distinct", "distinct inertial torsions",
              distinct ? StageStatus::verified : StageStatus::failed, std::move(w));
        if (!distinct)
            return r;
    }

    // D(M) vanishes and the inertia quotient has three elements.
    r.assume("wh-c7-rank", "Wh(M) = Wh(C_7)");
    r.assume("involution-trivial-abelian", "bar map on Wh(C_7)");
    const InvolutiveAbelianGroup wh = InvolutiveAbelianGroup::free(2, 1);
    const DoubleSubgroup dm = double_subgroup(wh, parity_of(d));
    r.add("D(M) = 0", "doubles sigma + (-1)^d conj(sigma) with d odd and trivial bar map",
          dm.iso_type.is_trivial() ? StageStatus::verified : StageStatus::failed,
          {{"D(M)", dm.iso_type.to_string()}, {"d", std::to_string(d)}});
    r.assume("inertia-lens-trivial", "inertial h-cobordisms of L");
    {
        Witness w;
        for (const auto& c : inertia.classes)
            w.emplace_back("phi_{" + join_labels(c.labels) + "}", c.value.representative().to_string());
        w.emplace_back("cardinality", std::to_string(inertia.cardinality()));
        r.add("|I(M)/D(M)| = 3", "inertia set of M modulo doubles",
              inertia.cardinality() == 3 && dm.iso_type.is_trivial() ? StageStatus::verified : StageStatus::failed,
              std::move(w));
    }
    {
        const FgAbGroup h1 = homology_c2(whitehead_module(wh, d), 1);
        r.add("H_1(C_2; Wh(M)) = Z/2 + Z/2", "C_2-homology of Z^2 with trivial action",
              h1 == FgAbGroup::from_ints({2, 2}) ? StageStatus::verified : StageStatus::failed,
              {{"H_1", h1.to_string()}});
    }
    r.assume("mapping-class-group-finite", "finiteness of the mapping class group of L");
    r.assume("s-cobordism", "h-cobordisms classified by torsion");

    const std::size_t n = inertia.cardinality();
    r.add("factor N = " + std::to_string(n), "ratio of the fundamental groups of the block diffeomorphism spaces",
          r.ok() ? StageStatus::derived : StageStatus::failed,
          {{"N", std::to_string(n)}, {"d", std::to_string(d)}});
    if (r.ok())
        r.conclusion = "|pi_1 B Diff~(L)| = " + std::to_string(n) + " |pi_1 B Diff~(M)| < infinity in dimension d = " +
                       std::to_string(d);
    return r;
}

}  // namespace hcob
