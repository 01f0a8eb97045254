#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "expression.hpp"
#include "support.hpp"

using namespace stagger;
using namespace stagger::testing;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    json report;
    std::string text;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    const int code = cli::run(args, out);
    Outcome o{code, nullptr, out.str()};
    try {
        o.report = json::parse(o.text);
    } catch (const json::parse_error&) {
    }
    return o;
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST(Cli, OrbitsListsEightStrata) {
    const auto o = call({"orbits"});
    ASSERT_EQ(o.code, 0);
    const auto& rows = o.report["results"]["strata"];
    ASSERT_EQ(rows.size(), 8u);
    for (const auto& r : rows) {
        EXPECT_EQ(r["alt"], r["cod"]);
        EXPECT_EQ(r["scod"].get<int>(), 2 * r["cod"].get<int>());
    }
}

TEST(Cli, OrbitsFromScenarioFile) {
    const auto path = write_temp("scenario.json", R"j({"n": 2, "cocharacters": {"global_linear": [1, 2]},
        "dualizing": {"twist": [0, 0], "shift": 0}, "objects": {"P": "skyscraper((0,0))"}})j");
    const auto o = call({"orbits", path});
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_EQ(o.report["results"]["count"], 4);
}

TEST(Cli, PerStratumScenario) {
    const auto path = write_temp("per_stratum.json", R"({"n": 1, "cocharacters": {"per_stratum": {"": [], "1": [3]}}})");
    const auto o = call({"orbits", path});
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_EQ(o.report["results"]["strata"][1]["alt"], 3);
}

TEST(Cli, ComputeCohomologyOfTensor) {
    const auto o = call({"compute", "--expr", "cohomology(tensorL(Ox,Oz))"});
    ASSERT_EQ(o.code, 0) << o.text;
    const auto& h = o.report["results"]["cohomology"];
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0]["degree"], -1);
    EXPECT_EQ(h[0]["module"]["finite_length"], json::parse(R"([{"character":[0,-1,0],"multiplicity":1}])"));
    EXPECT_EQ(h[1]["degree"], 0);
    EXPECT_EQ(h[1]["module"]["finite_length"], json::parse(R"([{"character":[0,0,0],"multiplicity":1}])"));
}

TEST(Cli, ReportsAreByteStable) {
    const std::vector<std::string> args{"compute", "--expr", "dual(tensorL(Ox,Oz))"};
    EXPECT_EQ(call(args).text, call(args).text);
}

TEST(Cli, ExampleS12) {
    const auto o = call({"example-s12"});
    ASSERT_EQ(o.code, 0) << o.text;
    const auto& r = o.report["results"];
    EXPECT_TRUE(r["all_passed"].get<bool>());
    for (const char* key : {"resolution_of_Ox", "rhom_Oz_A", "dual_of_tensor", "decomposition"})
        EXPECT_TRUE(r[key]["pass"].get<bool>()) << key;
}

TEST(Cli, SyntaxErrorIsUsageError) {
    const auto o = call({"compute", "--expr", "twist(Ox,"});
    EXPECT_EQ(o.code, 2);
    EXPECT_EQ(o.report["error"]["code"], "syntax");
}

TEST(Cli, UnknownNameAndArity) {
    EXPECT_EQ(call({"compute", "--expr", "Q"}).report["error"]["code"], "unknown_name");
    EXPECT_EQ(call({"compute", "--expr", "dual(Ox,Oz)"}).report["error"]["code"], "arity");
    EXPECT_EQ(call({"compute", "--expr", "skyscraper((0,0))"}).report["error"]["code"], "malformed_character");
}

TEST(Cli, DomainErrorExitsOne) {
    const auto o = call({"perversity", "--kind", "middle", "--middle", "db"});
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(o.report["error"]["code"], "parity");
    EXPECT_FALSE(o.report["error"]["context"].get<std::string>().empty());
}

TEST(Cli, UnknownSubcommandIsUsage) { EXPECT_EQ(call({"frobnicate"}).code, 2); }

TEST(Cli, MembershipCertificate) {
    const auto o = call({"membership", "--expr", "H((0,0,0))", "--family", "staggered_heart"});
    ASSERT_EQ(o.code, 0) << o.text;
    const auto& cert = o.report["certificates"][0];
    EXPECT_EQ(cert["family"], "staggered_heart");
    EXPECT_TRUE(cert["verdict"].get<bool>());
    for (const char* key : {"stratum", "k", "bound", "actual"}) EXPECT_TRUE(cert["witnesses"][0].contains(key)) << key;
}

TEST(Cli, PurityAndDecompose) {
    auto o = call({"purity", "--expr", "tensorL(Ox,Oz)", "--notion", "skew", "--w", "0"});
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_TRUE(o.report["results"]["verdict"].get<bool>());
    o = call({"decompose", "--expr", "tensorL(Ox,Oz)", "--w", "0"});
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_EQ(o.report["results"]["summands"],
              json::parse(R"([{"stratum":[1,2,3],"character":[0,0,0],"shift":3},
                              {"stratum":[1,2,3],"character":[0,-1,0],"shift":5}])"));
}

TEST(Cli, PerversityKinds) {
    EXPECT_TRUE(call({"perversity", "--kind", "moderate-check"}).report["results"]["moderate"].get<bool>());
    const auto o = call({"perversity", "--kind", "skew"});
    for (const auto& e : o.report["results"]["perversity"]) EXPECT_EQ(e["value"], 0);
    const auto m = call({"perversity", "--kind", "monotone-check", "-r", "cod", "--dual-kind", "db"});
    EXPECT_TRUE(m.report["results"]["monotone"].get<bool>());
    const auto lit = call({"perversity", "--kind", "baric-dual", "-r", R"({"": 1})"});
    EXPECT_EQ(lit.report["results"]["perversity"][0]["value"], -1);
}

TEST(Cli, Classify) {
    const auto o = call({"classify", "--upsilon", "[[1,0]]", "--phi", "[0,3]"});
    ASSERT_EQ(o.code, 0) << o.text;
    EXPECT_TRUE(o.report["results"]["semifocused"].get<bool>());
    EXPECT_FALSE(o.report["results"]["focused"].get<bool>());
}

TEST(Cli, TimingOnlyWhenAsked) {
    EXPECT_FALSE(call({"orbits"}).report.contains("timing_ms"));
    EXPECT_TRUE(call({"orbits", "--timing"}).report.contains("timing_ms"));
}

TEST(Expression, StratumSheafIsXAxis) {
    cli::Evaluator ev(worked_setup(), {});
    const auto f = ev.object("stratum_sheaf([2,3])");
    const auto box = validation_box(3, {Character::zero(3)}, 3);
    EXPECT_EQ(cohomology_dims(f, box), cohomology_dims(ox(), box));
}

TEST(Expression, TwistedZAxis) {
    cli::Evaluator ev(worked_setup(), {});
    const auto h = cohomology(ev.object("twist(stratum_sheaf([1,2]),(1,1,0))"));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h.at(0).generators().gens, std::vector{ch({1, 1, 0})});
}

TEST(Expression, ShiftedSkyscraperIsSimple) {
    cli::Evaluator ev(worked_setup(), {});
    const auto a = ev.object("shift(skyscraper((0,0,0)),-3)");
    const auto b = ev.object("H((0,0,0))");
    const auto box = validation_box(3, {Character::zero(3)}, 2);
    EXPECT_EQ(cohomology_dims(a, box), cohomology_dims(b, box));
}

TEST(Expression, CyclicDefinition) {
    cli::Evaluator ev(worked_setup(), {{"P", "sum(Q, Q)"}, {"Q", "P"}});
    try {
        ev.object("P");
        FAIL();
    } catch (const cli::UsageError& e) {
        EXPECT_EQ(e.code(), "cyclic_definition");
    }
}

TEST(Expression, CohomologyOnlyAtTop) {
    cli::Evaluator ev(worked_setup(), {});
    EXPECT_THROW(ev.evaluate("dual(cohomology(A))"), cli::UsageError);
    EXPECT_THROW(ev.object("cohomology(Ox)"), cli::UsageError);
}

TEST(Expression, SyntaxErrorPosition) {
    try {
        cli::parse_expression("tensorL(Ox Oz)");
        FAIL();
    } catch (const cli::UsageError& e) {
        EXPECT_EQ(e.code(), "syntax");
        EXPECT_EQ(e.context(), "position 11");
    }
}
