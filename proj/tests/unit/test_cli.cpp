#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hypeval/errors.hpp"
#include "hypeval_cli/app.hpp"
#include "hypeval_cli/report.hpp"
#include "hypeval_cli/suites.hpp"

using hypeval::cli::run_cli;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hypeval");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const json* find_row(const json& rows, long n)
{
    for (const auto& r : rows)
        if (r["n"] == n) return &r;
    return nullptr;
}

}  // namespace

TEST(CliEval, TerminatingTwoFOne)
{
    CliRun r = run({"--json", "eval", "2f1-neg1", "--upper", "1,-1", "--lower", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    EXPECT_EQ(d["schema"], 1);
    EXPECT_EQ(d["result"]["exact"], "4/3");
    EXPECT_NEAR(std::stod(d["result"]["value"].get<std::string>()), 4.0 / 3.0, 1e-15);
    EXPECT_EQ(d["status"], "pass");
}

TEST(CliEval, ConvergentTwoFOne)
{
    CliRun r = run({"--json", "eval", "2f1-neg1", "--upper", "1/2,2", "--lower", "5/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.doc()["result"]["value"].get<std::string>()), 0.75, 1e-12);
}

TEST(CliEval, GammaProductText)
{
    CliRun r = run({"eval", "gamma-product", "--spec", "G(1/2)"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1.77245385090551"), std::string::npos) << r.out;
}

TEST(CliEval, GammaProductAtPoint)
{
    CliRun r = run({"--json", "eval", "gamma-product", "--spec", "G(a)/G(a+1)", "--point", "a=4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.doc()["result"]["value"].get<std::string>()), 0.25, 1e-15);
}

TEST(CliEval, Series)
{
    CliRun r = run({"--json", "eval", "series", "--upper", "-2,b", "--lower", "c", "--z", "1", "--point", "b=1,c=3"});
    ASSERT_EQ(r.code, 0) << r.err;
    // 1 - 2/3 + 1/6 ... = 2F1(-2,1;3;1) = (2)_2/(3)_2 = 1/2
    EXPECT_NEAR(std::stod(r.doc()["result"]["value"].get<std::string>()), 0.5, 1e-15);
}

TEST(CliEval, ErrorsMapToExitCodes)
{
    CliRun pole = run({"eval", "2f1-neg1", "--upper", "1,1/2", "--lower", "-3"});
    EXPECT_EQ(pole.code, 3);
    EXPECT_NE(pole.err.find("hypeval: "), std::string::npos);
    EXPECT_EQ(std::count(pole.err.begin(), pole.err.end(), '\n'), 1);

    EXPECT_EQ(run({"eval", "2f1-neg1", "--upper", "x,1", "--lower", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "2f1-neg1", "--upper", "1", "--lower", "3"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliVerify, CertificatesPassExactly)
{
    CliRun r = run({"--json", "verify", "certificates", "--n-range", "1..12"});
    ASSERT_EQ(r.code, 0) << r.out;
    json d = r.doc();
    EXPECT_EQ(d["status"], "pass");
    EXPECT_EQ(d["summary"]["failed"], 0);
    for (const auto& c : d["checks"]) {
        EXPECT_EQ(c["kind"], "exact");
        EXPECT_EQ(c["status"], "pass");
    }
    EXPECT_GE(d["checks"].size(), 24U);
}

TEST(CliVerify, GenkumSweep)
{
    CliRun r = run({"--json", "verify", "genkum", "--n-range", "-5..5", "--points", "20", "--seed", "7", "--tol", "1e-9"});
    ASSERT_EQ(r.code, 0) << r.out;
    json d = r.doc();
    EXPECT_GE(d["summary"]["passed"].get<int>(), 11 * 20);
    for (const auto& c : d["checks"]) EXPECT_EQ(c["kind"], "numeric");
}

TEST(CliVerify, SpecialSingleParameter)
{
    CliRun r = run({"--json", "verify", "special", "--kind", "specfo1", "--param", "5/2"});
    ASSERT_EQ(r.code, 0) << r.out;
    json d = r.doc();
    ASSERT_EQ(d["checks"].size(), 1U);
    EXPECT_LT(std::stod(d["checks"][0]["residual"].get<std::string>()), 1e-10);
}

TEST(CliVerify, DisplayedQMinusFourIsReportedAsFailure)
{
    CliRun r = run({"--json", "verify", "special", "--kind", "q4_zero"});
    EXPECT_EQ(r.code, 1);
    json d = r.doc();
    EXPECT_EQ(d["status"], "fail");
    int failed = 0;
    for (const auto& c : d["checks"])
        if (c["status"] == "fail") {
            ++failed;
            EXPECT_NE(c["name"].get<std::string>().find("displayed"), std::string::npos);
        }
    EXPECT_EQ(failed, 1);
}

TEST(CliVerify, DeterministicAcrossThreadCounts)
{
    CliRun one = run({"--json", "--threads", "1", "verify", "orbit", "--seed", "5", "--n-range", "0..2", "--points", "4"});
    CliRun four = run({"--json", "--threads", "4", "verify", "orbit", "--seed", "5", "--n-range", "0..2", "--points", "4"});
    ASSERT_EQ(one.code, 0) << one.out;
    EXPECT_EQ(one.out, four.out);
    CliRun other = run({"--json", "verify", "orbit", "--seed", "6", "--n-range", "0..2", "--points", "4"});
    EXPECT_NE(one.out, other.out);
}

TEST(CliVerify, TimingOnlyWhenAsked)
{
    CliRun plain = run({"--json", "verify", "certificates", "--n-range", "1..2"});
    CliRun timed = run({"--json", "--timing", "verify", "certificates", "--n-range", "1..2"});
    EXPECT_FALSE(plain.doc()["checks"][0].contains("runtime_ms"));
    EXPECT_TRUE(timed.doc()["checks"][0].contains("runtime_ms"));
}

TEST(CliVerify, BadArguments)
{
    EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
    EXPECT_EQ(run({"verify", "certificates", "--n-range", "5"}).code, 2);
    EXPECT_EQ(run({"verify", "special", "--param", "5/2"}).code, 2);
    EXPECT_THROW(hypeval::cli::parse_range("3..x"), hypeval::ParseError);
    EXPECT_EQ(hypeval::cli::parse_range("-7..7"), (std::pair<long, long>{-7, 7}));
}

TEST(CliPqTable, TableSlice)
{
    CliRun r = run({"--json", "pq-table", "--n-range", "-3..1"});
    ASSERT_EQ(r.code, 0) << r.err;
    json rows = r.doc()["result"]["rows"];
    ASSERT_EQ(rows.size(), 5U);
    const json* m2 = find_row(rows, -2);
    ASSERT_TRUE(m2);
    EXPECT_EQ((*m2)["P"], "(a - 2)/(b - 1)");
    const json* p1 = find_row(rows, 1);
    ASSERT_TRUE(p1);
    EXPECT_EQ((*p1)["Q"], "1/2");
    EXPECT_EQ((*p1)["P"], "(-b + a)/(2*a)");
}

TEST(CliPqTable, ZeroRowAndSecondForm)
{
    json z = run({"--json", "pq-table", "--n-range", "0..0"}).doc()["result"]["rows"];
    ASSERT_EQ(z.size(), 1U);
    EXPECT_EQ(z[0]["P"], "1/2");
    EXPECT_EQ(z[0]["Q"], "1/2");
    CliRun two = run({"pq-table", "--n-range", "2..2", "--variant", "THM2"});
    ASSERT_EQ(two.code, 0) << two.err;
    EXPECT_NE(two.out.find("(-3*b + 2*a)/(4*a)"), std::string::npos) << two.out;
}

TEST(CliPqTable, VariantOutOfRange)
{
    CliRun r = run({"pq-table", "--n-range", "-2..0", "--variant", "THM2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("VariantOutOfRange"), std::string::npos) << r.err;
}

TEST(CliOrbit, TrivialOrbit)
{
    CliRun r = run({"--json", "orbit", "--m", "0", "--y", "1,0,0,1,0,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    ASSERT_EQ(d["result"]["entries"].size(), 18U);
    for (const auto& e : d["result"]["entries"]) EXPECT_EQ(e["value"], "1");
    EXPECT_EQ(d["summary"]["passed"], 18);
}

TEST(CliOrbit, RandomValidLabel)
{
    // y0+y1+y2 = y3+y4+y5 = -1
    CliRun r = run({"--json", "orbit", "--m", "2", "--y", "1/3,2/7,-34/21,3/5,-1/4,-27/20"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    std::string v = d["result"]["value"];
    for (const auto& e : d["result"]["entries"]) EXPECT_EQ(e["value"], v);
}

TEST(CliOrbit, ConstraintViolationIsUsageError)
{
    EXPECT_EQ(run({"orbit", "--m", "1", "--y", "1,0,0,1,0,0"}).code, 2);
    EXPECT_EQ(run({"orbit", "--m", "2", "--y", "0,0,-1,0,0,-1"}).code, 3);
}

TEST(CliReport, PassRequiresNoFailures)
{
    using namespace hypeval::cli;
    Report r{"x", {}, {}, {}};
    EXPECT_TRUE(r.passed());
    r.checks.push_back({"s", CheckKind::numeric, CheckStatus::skip, {}, {}, "no points", 0});
    EXPECT_TRUE(r.passed());
    r.checks.push_back(exact_record("e", hypeval::RatFunc(1)));
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(exact_record("z", hypeval::RatFunc(0)).status, CheckStatus::pass);
}
