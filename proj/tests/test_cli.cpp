#include <gtest/gtest.h>

#include <sstream>

#include "ribbon/cli.hpp"

using namespace ribbon;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ribbon_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

void expect_usage_error(std::vector<std::string> args) {
    auto r = run(args);
    EXPECT_EQ(r.code, cli::usage_error) << r.out;
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
}

}  // namespace

TEST(Cli, SingleCoefficient) {
    auto r = run({"qlr", "--n", "3", "--outer", "4,4,4", "--inner", "", "--nu", "2,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q^4\n");
}

TEST(Cli, RibbonFunctionDegenerates) {
    auto r = run({"ribbonfn", "--n", "1", "--outer", "2,1", "--inner", ""});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s[2,1]\n");
}

TEST(Cli, WorkedExampleLatex) {
    auto r = run({"ribbonfn", "--n", "3", "--outer", "4,4,4", "--format", "latex"});
    EXPECT_EQ(r.out, "q^{2} s_{211} + q^{4}(s_{31}+s_{22}) + q^{6} s_{31} + q^{8} s_{4}\n");
}

TEST(Cli, QlrTableJson) {
    auto r = run({"qlr", "--n", "3", "--outer", "4,4,4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).get<QLRTable>(), qlr_via_expansion(SkewShape(Partition{4, 4, 4}), 3));
}

TEST(Cli, VerifyReportsJson) {
    auto r = run({"verify", "--identity", "heisenberg", "--n", "2", "--max-size", "8"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j.at("failures").empty());
    EXPECT_TRUE(j.at("ok").get<bool>());
    auto w = run({"verify", "--identity", "relations", "--n", "2", "--max-size", "5", "--window", "-4:6"});
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(json::parse(w.out).at("grid").at("window"), "-4:6");
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run({"tableaux", "--n", "2", "--outer", "4,2", "--weight", "2,1"}).code, 0);
    EXPECT_EQ(run({"strips", "--n", "2", "--inner", "1", "--k", "2", "--format", "json"}).code, 0);
    auto q = run({"quotient", "--n", "3", "--outer", "5,3,3,1", "--format", "json"});
    EXPECT_EQ(json::parse(q.out).get<CoreQuotient>(), core_and_quotient(Partition{5, 3, 3, 1}, 3));
    auto a = run({"apply", "--n", "2", "--expr", "u[1] u[0]"});
    EXPECT_EQ(a.out, "q^2 (2,2)\n");
    auto y = run({"yamanouchi", "--n", "3", "--outer", "4,4,4", "--nu", "2,2"});
    EXPECT_NE(y.out.find("c = q^4"), std::string::npos);
    auto d = run({"dim", "--n", "1", "--k", "2", "--format", "json"});
    EXPECT_EQ(json::parse(d.out).at("rank"), 5);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InconclusiveDimensionFails) {
    EXPECT_EQ(run({"dim", "--n", "1", "--k", "2", "--truncation", "3"}).code, cli::verification_failed);
}

TEST(Cli, UsageErrors) {
    expect_usage_error({});
    expect_usage_error({"qlr", "--n", "2", "--outer", "3"});
    expect_usage_error({"qlr", "--n", "2", "--outer", "1,3"});
    expect_usage_error({"qlr", "--n", "2", "--outer", "2", "--inner", "3"});
    expect_usage_error({"qlr", "--n", "3", "--outer", "4,4,4", "--nu", "2"});
    expect_usage_error({"qlr", "--n", "3", "--outer", "4,4,4", "--format", "xml"});
    expect_usage_error({"verify", "--n", "2", "--window", "5:1"});
    expect_usage_error({"verify", "--n", "2", "--window", "abc"});
    expect_usage_error({"verify", "--n", "2", "--identity", "bogus"});
    expect_usage_error({"yamanouchi", "--n", "2", "--outer", "6,6", "--nu", "3,3"});
    expect_usage_error({"tableaux", "--n", "2", "--outer", "4,2", "--weight", "2,x"});
    expect_usage_error({"apply", "--n", "2", "--expr", "u[1"});
    expect_usage_error({"dim", "--n", "0", "--k", "1"});
}
