#include <gtest/gtest.h>

#include <stdexcept>

#include "hcob/facts.hpp"
#include "hcob/json_io.hpp"
#include "hcob/lens_space.hpp"
#include "support/generators.hpp"

using namespace hcob;

TEST(Json, GroupRingRoundTrip)
{
    gen::Rng rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = gen::element(rng, static_cast<std::size_t>(rng.uniform(1, 9)), 1000);
        x = x * x * x;  // coefficients beyond 64 bits are rare but exercised through the string encoding
        EXPECT_EQ(group_ring_from_json(to_json(x)), x);
    }
    EXPECT_EQ(to_json(GroupRingElement::from_ints(3, {1, -2, 0})), R"({"order":3,"coeffs":["1","-2","0"]})");
    EXPECT_THROW(group_ring_from_json(R"({"order":2,"coeffs":["1"]})"), std::invalid_argument);
    EXPECT_THROW(group_ring_from_json("not json"), std::invalid_argument);
}

TEST(Json, InvolutiveGroupRoundTrip)
{
    gen::Rng rng(402);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = gen::involutive_group(rng);
        const auto b = involutive_group_from_json(to_json(a));
        EXPECT_EQ(b.generator_count(), a.generator_count());
        EXPECT_EQ(b.relations(), a.relations());
        EXPECT_EQ(b.involution(), a.involution());
    }
    // T = 2 is not an involution on Z.
    EXPECT_THROW(involutive_group_from_json(R"({"generators":1,"relations":[],"involution":[[2]]})"),
                 std::invalid_argument);
}

TEST(Json, FgGroupAndSubcomplexRoundTrip)
{
    const auto g = FgAbGroup::from_ints({6, 4, 0});
    EXPECT_EQ(fg_group_from_json(to_json(g)), g);
    gen::Rng rng(403);
    for (int trial = 0; trial < 50; ++trial) {
        const auto k = gen::subcomplex(rng, static_cast<int>(rng.uniform(0, kMaxAmbient)));
        EXPECT_EQ(subcomplex_from_json(to_json(k)), k);
    }
    EXPECT_THROW(subcomplex_from_json(R"({"p":2,"faces":["01"]})"), std::invalid_argument);
}

TEST(Json, TorsionFunctorRoundTrip)
{
    const FAlgModel model(InvolutiveAbelianGroup::cyclic(5, -1));
    for (const auto& x : model.enumerate(1))
        EXPECT_EQ(torsion_functor_from_json(to_json(x)), x);
}

TEST(Json, SymbolRoundTrip)
{
    const HCobordismSymbol w(11, WhiteheadClass(theorem_a_unit()), 3);
    const auto back = symbol_from_json(to_json(w));
    EXPECT_TRUE(symbol_equal(back, w));
    EXPECT_EQ(back.torsion().representative(), w.torsion().representative());
    EXPECT_THROW(symbol_from_json(R"({"d":5,"torsion":{"order":7,"coeffs":["1","1","0","0","0","0","0"]},"twist":1,"orientation":1})"),
                 std::invalid_argument);
}

TEST(Report, RoundTripAndDeterminism)
{
    const auto r = theorem_a_report(1);
    const auto text = to_json(r);
    EXPECT_EQ(report_from_json(text), r);
    EXPECT_EQ(to_json(theorem_a_report(1)), text);
    EXPECT_EQ(to_json(report_from_json(text)), text);
}

TEST(Report, ExitCodeTracksFailedStages)
{
    ReportDocument r("demo");
    r.add("a", "ref", StageStatus::verified);
    r.add("b", "ref", StageStatus::derived);
    r.assume("sk1-cyclic-prime", "ref");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.exit_code(), 0);
    r.add("c", "ref", StageStatus::failed);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.exit_code(), 1);
    EXPECT_NE(r.to_text().find("[FAILED] c"), std::string::npos);
}

TEST(Report, AssumedStageNeedsCitation)
{
    ReportDocument r("demo");
    EXPECT_THROW(r.add("x", "ref", StageStatus::assumed), std::invalid_argument);
    Stage s{"x", "ref", StageStatus::assumed, {}, "a citation"};
    EXPECT_NO_THROW(r.add_stage(s));
    EXPECT_NO_THROW(r.validate());
}

TEST(Report, StatusNames)
{
    for (const auto s : {StageStatus::verified, StageStatus::derived, StageStatus::assumed, StageStatus::failed})
        EXPECT_EQ(parse_stage_status(to_string(s)), s);
    EXPECT_THROW(parse_stage_status("maybe"), std::invalid_argument);
}

TEST(Facts, TableLookup)
{
    EXPECT_FALSE(literature_facts().empty());
    for (const auto& f : literature_facts()) {
        EXPECT_FALSE(f.id.empty());
        EXPECT_FALSE(f.citation.empty());
        EXPECT_EQ(&literature_fact(f.id), &f);
    }
    EXPECT_THROW(literature_fact("no-such-fact"), std::out_of_range);
    EXPECT_FALSE(facts_version().empty());
}
