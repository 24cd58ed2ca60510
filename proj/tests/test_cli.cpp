#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hcob/report.hpp"

using namespace hcob;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UnitVerify)
{
    const auto ok = run_cli({"unit", "verify", "--order", "7", "--coeffs", "2,2,0,-1,-1,-1,0"});
    EXPECT_EQ(ok.code, cli::kOk) << ok.err;
    EXPECT_NE(ok.out.find("1-2t+3t^2-3t^3+3t^4-2t^5+t^6"), std::string::npos);

    const auto bad = run_cli({"unit", "verify", "--order", "7", "--coeffs", "1,1"});
    EXPECT_EQ(bad.code, cli::kStageFailed);
    EXPECT_NE(bad.out.find("[FAILED]"), std::string::npos);

    // Short lists are padded with zeros; long ones are rejected.
    EXPECT_EQ(run_cli({"unit", "verify", "--order", "5", "--coeffs", "1,-1,0,0,-1"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"unit", "verify", "--order", "5", "--coeffs", "1,-1,0,0,-1,0"}).code, cli::kUsage);
}

TEST(Cli, WhiteheadEqualityIsDerivedEitherWay)
{
    const auto same = run_cli({"wh", "eq", "--order", "7", "--x", "2,2,0,-1,-1,-1,0", "--y", "2,0,-1,-1,-1,0,2"});
    EXPECT_EQ(same.code, cli::kOk);
    EXPECT_NE(same.out.find("equal=true"), std::string::npos) << same.out;
    const auto differ = run_cli({"wh", "eq", "--order", "7", "--x", "2,2,0,-1,-1,-1,0", "--y", "1"});
    EXPECT_EQ(differ.code, cli::kOk);
    EXPECT_NE(differ.out.find("equal=false"), std::string::npos) << differ.out;
}

TEST(Cli, TheoremReportAsJson)
{
    const auto r = run_cli({"--json", "lens", "report-theorem-a", "--k", "1"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("tool"), "hcob");
    EXPECT_EQ(doc.at("version"), library_version());
    EXPECT_NE(doc.at("conclusion").get<std::string>().find("= 3 |pi_1"), std::string::npos);

    const auto trivial = run_cli({"lens", "report-theorem-a", "--k", "1", "--unit", "1"});
    EXPECT_EQ(trivial.code, cli::kStageFailed);
}

TEST(Cli, HomologyAndTate)
{
    const auto h = run_cli({"homology", "--target", "zxz-trivial", "--n", "1"});
    EXPECT_EQ(h.code, cli::kOk);
    EXPECT_NE(h.out.find("group=Z/2 + Z/2"), std::string::npos) << h.out;
    const auto t = run_cli({"tate", "--target", "z4-sign", "--n", "-3"});
    EXPECT_EQ(t.code, cli::kOk);
}

TEST(Cli, FalgPiAndCaps)
{
    const auto ok = run_cli({"falg", "pi", "--target", "z2-trivial", "--n", "2"});
    EXPECT_EQ(ok.code, cli::kOk) << ok.err;
    EXPECT_NE(ok.out.find("[VERIFIED]"), std::string::npos);
    const auto capped = run_cli({"falg", "pi", "--target", "z2-trivial", "--n", "4"});
    EXPECT_EQ(capped.code, cli::kUsage);
    EXPECT_NE(capped.err.find("cap"), std::string::npos);
    const auto lowered = run_cli({"--max-p", "1", "falg", "pi", "--target", "z2-trivial", "--n", "2"});
    EXPECT_EQ(lowered.code, cli::kUsage);
}

TEST(Cli, OtherSubcommands)
{
    EXPECT_EQ(run_cli({"falg", "check", "--target", "z3-sign", "--p", "1"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"subcomplex", "enum", "--p", "2"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"torsion", "double", "--order", "7", "--d", "5", "--torsion", "2,2,0,-1,-1,-1,0"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"torsion", "compose", "--order", "7", "--d", "5", "--torsion", "2,2,0,-1,-1,-1,0",
                       "--torsion2", "1"}).code,
              cli::kOk);
    EXPECT_EQ(run_cli({"torsion", "reverse", "--order", "7", "--d", "5", "--torsion", "1", "--twist", "3"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"lens", "inertia", "--p", "5", "--k", "1", "--unit", "1,-1,0,0,-1"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"kapp", "tor", "--p", "7", "--i", "2"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"kapp", "k3", "--p", "7"}).code, cli::kOk);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"homology", "--target", "q3-trivial", "--n", "1"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"kapp", "tor", "--p", "9", "--i", "0"}).code, cli::kUsage);
    const auto v = run_cli({"--version"});
    EXPECT_EQ(v.code, cli::kOk);
    EXPECT_EQ(v.out, library_version() + "\n");
}

TEST(Cli, ParseTarget)
{
    const auto a = cli::parse_target("z2xz2-sign");
    EXPECT_EQ(a.underlying(), FgAbGroup::from_ints({2, 2}));
    EXPECT_EQ(cli::parse_target("zxz-trivial").underlying(), FgAbGroup::from_ints({0, 0}));
    EXPECT_TRUE(cli::parse_target("zero").underlying().is_trivial());
    for (const char* bad : {"z2", "z1-trivial", "z2-flip", "y2-trivial", "-trivial"})
        EXPECT_THROW(cli::parse_target(bad), std::invalid_argument) << bad;
}
