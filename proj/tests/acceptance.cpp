// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcob/abelian_group.hpp"
#include "hcob/falg.hpp"
#include "hcob/k_appendix.hpp"
#include "hcob/lens_space.hpp"
#include "hcob/simplicial_complex.hpp"
#include "hcob/torsion_calculus.hpp"
#include "oracles/falg_brute.hpp"
#include "oracles/simplicial.hpp"
#include "support/generators.hpp"

using namespace hcob;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string group_list(const FgAbGroup& g) { return g.to_string(); }

const std::vector<InvolutiveAbelianGroup>& sweep_targets()
{
    static const std::vector<InvolutiveAbelianGroup> xs = [] {
        std::vector<InvolutiveAbelianGroup> out;
        for (const int sign : {1, -1}) {
            out.push_back(InvolutiveAbelianGroup::cyclic(2, sign));
            out.push_back(InvolutiveAbelianGroup::cyclic(3, sign));
            out.push_back(InvolutiveAbelianGroup::cyclic(4, sign));
            out.push_back(InvolutiveAbelianGroup::sum_of_cyclic({2, 2}, sign));
        }
        return out;
    }();
    return xs;
}

std::string describe(const InvolutiveAbelianGroup& a)
{
    return a.underlying().to_string() + (a.involution().at(0, 0) == 1 ? " trivial" : " sign");
}

// 1. u * u^{-1} = 1 with the stated inverse.
Verdict unit_verification()
{
    Verdict v;
    const auto u = theorem_a_unit();
    const auto expected = GroupRingElement::from_ints(7, {1, -2, 3, -3, 3, -2, 1});
    v.require(theorem_a_unit_inverse() == expected, "stored inverse differs");
    std::vector<double> times;
    for (int rep = 0; rep < 101; ++rep) {
        const auto start = Clock::now();
        const auto inv = invert_unit(u);
        const bool ok = inv && *inv == expected && u * *inv == GroupRingElement::one(7);
        times.push_back(seconds_since(start));
        v.require(ok, "inverse check failed");
    }
    std::nth_element(times.begin(), times.begin() + 50, times.end());
    const double median = times[50];
    v.require(median < 1e-3, "median time above 1 ms");
    v.detail = v.pass ? "median " + std::to_string(median * 1e6) + " us" : v.detail;
    return v;
}

// 2. The inertia report and the p = 5 instance.
Verdict inertia_cardinality()
{
    Verdict v;
    const auto start = Clock::now();
    const auto r = theorem_a_report(1);
    const double elapsed = seconds_since(start);
    v.require(r.exit_code() == 0, "report has a failed stage");
    auto stage = [&](const std::string& prefix) -> const Stage* {
        for (const auto& s : r.stages)
            if (s.name.rfind(prefix, 0) == 0)
                return &s;
        return nullptr;
    };
    const Stage* distinct = stage("1, phi_2(u)/u, phi_3(u)/u pairwise distinct");
    v.require(distinct && distinct->status == StageStatus::verified, "witnesses not verified distinct");
    const Stage* fixed = stage("phi_6(u) ~ u");
    v.require(fixed && fixed->status == StageStatus::verified, "phi_6(u) ~ u not verified");
    const Stage* card = stage("|I(M)/D(M)| = 3");
    v.require(card && card->status == StageStatus::verified, "cardinality stage not verified");

    const WhiteheadClass u(theorem_a_unit());
    const auto set = inertia_set(LensSpace::balanced(7, 1), u);
    v.require(set.cardinality() == 3, "inertia set does not have three classes");
    const std::vector<WhiteheadClass> reps{WhiteheadClass::identity(7), u.twisted(2) * u.inverted(),
                                           u.twisted(3) * u.inverted()};
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            v.require(!wh_class_equal(reps[a], reps[b]), "witness classes coincide");
    v.require(wh_class_equal(u.twisted(6), u), "phi_6(u) not equivalent to u");

    const auto c5 = inertia_set(LensSpace::balanced(5, 1), GroupRingElement::from_ints(5, {1, -1, 0, 0, -1}));
    v.require(c5.cardinality() == 2, "p = 5 instance does not give 2");
    v.require(elapsed < 1.0, "report slower than 1 s");
    if (v.pass)
        v.detail = "N = 3, p = 5 gives 2, " + std::to_string(elapsed * 1e3) + " ms";
    return v;
}

// 3. pi_n of the Moore complex against the C_2-homology.
Verdict quasi_isomorphism()
{
    Verdict v;
    const auto start = Clock::now();
    int checked = 0;
    for (const auto& a : sweep_targets()) {
        const FAlgModel model(a);
        for (int n = 0; n <= 3; ++n) {
            const auto pi = model.moore_homotopy(n);
            const auto h = homology_c2(a, n);
            v.require(pi == h, describe(a) + " n=" + std::to_string(n) + ": " + group_list(pi) + " vs " + group_list(h));
            ++checked;
        }
    }
    const double elapsed = seconds_since(start);
    v.require(elapsed < 60.0, "sweep slower than 60 s");
    if (v.pass)
        v.detail = std::to_string(checked) + " cases, " + std::to_string(elapsed) + " s";
    return v;
}

// 4. psi is a degreewise bijection and a chain map.
Verdict psi_isomorphism()
{
    Verdict v;
    int checked = 0;
    for (const auto& a : sweep_targets()) {
        const FAlgModel model(a);
        const auto& t = model.target();
        const auto order = static_cast<std::size_t>(t.order());
        for (int n = 0; n <= 3; ++n) {
            std::set<ModVector> image;
            const auto chains = model.normalized(n).basis().elements();
            for (const auto& g : chains) {
                const auto x = model.from_scalars(n, g);
                const auto b = model.psi(x);
                image.insert(b);
                if (n >= 1) {
                    // d_n = 1 + (-1)^n T on the periodic resolution.
                    const auto tb = t.act(b);
                    const auto expected = n % 2 == 0 ? t.add(b, tb) : t.sub(b, tb);
                    v.require(model.psi(model.face(x, 0)) == expected,
                              describe(a) + " chain map fails at n=" + std::to_string(n));
                }
                ++checked;
            }
            v.require(chains.size() == order && image.size() == order,
                      describe(a) + " psi not bijective at n=" + std::to_string(n));
        }
    }
    if (v.pass)
        v.detail = std::to_string(checked) + " normalized chains";
    return v;
}

// 5. |F_p(Z/2)| by constraint solving, brute force and the Dold-Kan product.
Verdict cardinality_law()
{
    Verdict v;
    const FAlgModel model(InvolutiveAbelianGroup::cyclic(2, 1));
    std::vector<BigInt> normalized;
    for (int k = 0; k <= 2; ++k)
        normalized.push_back(model.normalized(k).basis().order());
    std::ostringstream detail;
    for (int p = 0; p <= 2; ++p) {
        const auto solved = model.enumerate(p).size();
        const auto brute = oracle::BruteFAlg(2, 1, p + 1).solutions().size();
        // Product of |N_k|^C(p, k).
        BigInt dold_kan = 1;
        long long binom = 1;
        for (int k = 0; k <= p; ++k) {
            for (long long e = 0; e < binom; ++e)
                dold_kan *= normalized[static_cast<std::size_t>(k)];
            binom = binom * (p - k) / (k + 1);
        }
        const BigInt expected = BigInt(1) << (1 << p);
        v.require(BigInt(solved) == expected, "constraint count wrong at p=" + std::to_string(p));
        v.require(BigInt(brute) == expected, "brute-force count wrong at p=" + std::to_string(p));
        v.require(dold_kan == expected, "Dold-Kan product wrong at p=" + std::to_string(p));
        detail << (p ? ", " : "") << solved;
    }
    if (v.pass)
        v.detail = "sizes " + detail.str();
    return v;
}

// 6. Duality criterion over every face assignment for Z/6 on the triangle.
Verdict duality_criterion_exhaustive()
{
    Verdict v;
    long long hypothesis = 0;
    long long counterexamples = 0;
    for (const int sign : {1, -1}) {
        const auto t = std::make_shared<const CyclicDecomposition>(InvolutiveAbelianGroup::cyclic(6, sign));
        FaceExtension ext(2);
        std::vector<ModVector> values(8, t->zero());
        for (long long code = 0; code < 6LL * 6 * 6 * 6 * 6 * 6; ++code) {
            long long c = code;
            for (Face f = 1; f < 7; ++f) {
                values[f] = t->from_presentation(IntVector{BigInt(c % 6)});
                c /= 6;
            }
            const TorsionFunctor tf(2, t, values);
            if (!duality_criterion_hypothesis(tf, ext))
                continue;
            ++hypothesis;
            if (!satisfies_all_dualities(tf, ext))
                ++counterexamples;
        }
    }
    v.require(hypothesis > 0, "no functor satisfies the hypothesis");
    v.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    if (v.pass)
        v.detail = std::to_string(hypothesis) + " functors meet the hypothesis, 0 counterexamples";
    return v;
}

// 7. Torsion identities over random unit classes in Z[C_5] and Z[C_7].
Verdict torsion_identities()
{
    Verdict v;
    gen::Rng rng(7001);
    const WhiteheadClass u7(theorem_a_unit());
    const std::vector<WhiteheadClass> c7{u7, u7.twisted(2)};
    const std::vector<WhiteheadClass> c5{WhiteheadClass(GroupRingElement::from_ints(5, {1, -1, 0, 0, -1}))};
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& gens = trial % 2 == 0 ? c5 : c7;
        const auto n = static_cast<long long>(gens.front().order());
        const long long d = rng.uniform(3, 14);
        std::vector<long long> e;
        const auto tau = gen::unit(rng, gens, 3, &e);
        const HCobordismSymbol w(d, tau, gen::unit_mod(rng, n));

        // Additive model: exponents in Z^r with the trivial bar map.
        const auto wh = InvolutiveAbelianGroup::free(gens.size(), 1);
        IntVector doubled(gens.size(), BigInt(0));
        WhiteheadClass expected = WhiteheadClass::identity(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            doubled[k] = d % 2 == 0 ? 2 * e[k] : 0;
            expected = expected * gens[k].pow(static_cast<long long>(doubled[k]));
        }
        v.require(wh_class_equal(double_of(w).torsion(), expected), "double torsion off its additive image");
        v.require(double_subgroup(wh, parity_of(d)).contains(wh, doubled), "double outside the double subgroup");
        v.require(symbol_equal(reverse(reverse(w)), w), "reverse is not involutive");

        const HCobordismSymbol w2(d, gen::unit(rng, gens, 3), gen::unit_mod(rng, n));
        const HCobordismSymbol w3(d, gen::unit(rng, gens, 3), gen::unit_mod(rng, n));
        v.require(symbol_equal(compose(compose(w, w2), w3), compose(w, compose(w2, w3))), "composition not associative");
        if (!v.pass)
            break;
    }
    if (v.pass)
        v.detail = "1000 random classes";
    return v;
}

// 8. Basepoint change commutes with the class in H_{n-1}.
Verdict basepoint_square()
{
    Verdict v;
    gen::Rng rng(8001);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto wh = gen::involutive_group(rng);
        const std::size_t g = wh.generator_count();
        const long long d = 2 * rng.uniform(1, 7) + 1;
        const int n = static_cast<int>(rng.uniform(2, 3));
        const IntMatrix cycles = cycle_lattice_c2(whitehead_module(wh, d), n - 1);
        IntVector tau_v(g, BigInt(0));
        for (std::size_t c = 0; c < cycles.cols(); ++c) {
            const BigInt k = rng.uniform(-4, 4);
            for (std::size_t r = 0; r < g; ++r)
                tau_v[r] += k * cycles.at(r, c);
        }
        IntVector tau_w(g, BigInt(0));
        for (auto& x : tau_w)
            x = rng.uniform(-9, 9);
        const IntMatrix base = rng.coin() ? IntMatrix::identity(g) : wh.involution();
        const BasepointChangeData in{wh, BigInt(rng.sign()) * base, tau_w, tau_v, n, d};
        v.require(wh.equal_elements(basepoint_change_stepwise(in), basepoint_change_torsion(in)),
                  "stepwise and closed form differ");
        v.require(basepoint_change_square_commutes(in), "square does not commute");
        ++checked;
    }
    if (v.pass)
        v.detail = std::to_string(checked) + " random inputs";
    return v;
}

// 9. Golden C_2-homology values.
Verdict golden_homology()
{
    Verdict v;
    v.require(homology_c2(InvolutiveAbelianGroup::free(2, 1), 1) == FgAbGroup::from_ints({2, 2}), "H_1(Z^2) wrong");
    const auto z = InvolutiveAbelianGroup::cyclic(0, 1);
    const std::vector<FgAbGroup> expected{FgAbGroup::from_ints({0}), FgAbGroup::from_ints({2}), FgAbGroup::trivial(),
                                          FgAbGroup::from_ints({2})};
    for (int n = 0; n <= 3; ++n)
        v.require(homology_c2(z, n) == expected[static_cast<std::size_t>(n)], "H_" + std::to_string(n) + "(Z) wrong");
    if (v.pass)
        v.detail = "Z/2 + Z/2; Z, Z/2, 0, Z/2";
    return v;
}

// 10. Tor and K_3 bookkeeping.
Verdict appendix_values()
{
    Verdict v;
    const auto start = Clock::now();
    for (const long long p : {3LL, 5LL, 7LL})
        for (int i = 0; i <= 4; ++i)
            v.require(tor_pi_r(p, i) == (i % 2 == 0 ? FgAbGroup::from_ints({p}) : FgAbGroup::trivial()),
                      "Tor wrong at p=" + std::to_string(p) + " i=" + std::to_string(i));
    const auto k3 = k3_divisibility(7);
    v.require(k3.order == 48 && k3.divisible_by_three, "K_3(F_7) bookkeeping wrong");
    const double elapsed = seconds_since(start);
    v.require(elapsed < 1.0, "slower than 1 s");
    if (v.pass)
        v.detail = std::to_string(elapsed * 1e3) + " ms";
    return v;
}

// 11. Contractibility against the homology oracle on every subcomplex of the tetrahedron.
Verdict simplicial_oracle()
{
    Verdict v;
    const auto start = Clock::now();
    int disagreements = 0;
    const auto all = oracle::all_subcomplexes(3);
    for (const auto bits : all)
        if (is_contractible(SubComplex::from_face_set(3, bits)) != oracle::homologically_contractible(bits))
            ++disagreements;
    const double elapsed = seconds_since(start);
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    v.require(elapsed < 30.0, "slower than 30 s");
    if (v.pass)
        v.detail = std::to_string(all.size()) + " complexes, 0 disagreements";
    return v;
}

// 12. Every unit is a simple automorphism of the balanced lens spaces.
Verdict balanced_simple()
{
    Verdict v;
    for (long long k = 1; k <= 3; ++k) {
        const auto l = LensSpace::balanced(7, k);
        for (long long i = 1; i < 7; ++i)
            v.require(is_simple_auto(l, i), l.to_string() + " i=" + std::to_string(i));
    }
    if (v.pass)
        v.detail = "k = 1, 2, 3";
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"unit verification in Z[C_7]", unit_verification},
        {"inertia cardinality", inertia_cardinality},
        {"Moore homotopy equals C_2-homology", quasi_isomorphism},
        {"psi is an isomorphism of chain complexes", psi_isomorphism},
        {"cardinality of F_p(Z/2)", cardinality_law},
        {"duality criterion for Z/6 on the triangle", duality_criterion_exhaustive},
        {"torsion calculus identities", torsion_identities},
        {"basepoint change square", basepoint_square},
        {"C_2-homology golden values", golden_homology},
        {"Tor and K_3 bookkeeping", appendix_values},
        {"contractibility oracle on the tetrahedron", simplicial_oracle},
        {"balanced lens spaces have only simple automorphisms", balanced_simple},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += v.pass ? 0 : 1;
        std::printf("[%s] %zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), v.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
