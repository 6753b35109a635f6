#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "app.hpp"
#include "ineqlab/error.hpp"
#include "ingest.hpp"

namespace ineqlab::cli {
namespace {

using Json = nlohmann::json;

std::string data(const std::string& name) { return std::string(INEQLAB_TEST_DATA) + "/" + name; }

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ineqlab");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(const std::vector<std::string>& args) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return Json::parse(r.out);
}

TEST(Ingest, ExampleFile) {
    const auto d = ingest(data("region_industry.csv"), "");
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.attribute_names(), (std::vector<std::string>{"region", "industry"}));
    EXPECT_EQ(d.records()[1].indicator, 3.0);
}

TEST(Ingest, QuotedFieldsAndCrlf) {
    std::istringstream in("\xEF\xBB\xBF\"a,b\",v\r\n\"x \"\"q\"\"\",2\r\n\r\ny,4\r\n");
    const auto t = read_csv(in);
    EXPECT_EQ(t.header, (std::vector<std::string>{"a,b", "v"}));
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0][0], "x \"q\"");
    const auto d = to_dataset(t, "v");
    EXPECT_EQ(d.total(), 6.0);
}

TEST(Ingest, Errors) {
    std::istringstream ragged("a,v\nx,1\ny\n");
    try {
        to_dataset(read_csv(ragged), "v");
        FAIL() << "expected an error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::istringstream bad("a,v\nx,abc\n");
    EXPECT_THROW(to_dataset(read_csv(bad), "v"), InputError);
    std::istringstream nan("a,v\nx,nan\n");
    EXPECT_THROW(to_dataset(read_csv(nan), "v"), InputError);
    std::istringstream missing("a,v\nx,1\n");
    EXPECT_THROW(to_dataset(read_csv(missing), "w"), InputError);
    std::istringstream blank_cat("a,v\n,1\n");
    EXPECT_THROW(to_dataset(read_csv(blank_cat), "v"), InputError);
    std::istringstream unterminated("a,v\n\"x,1\n");
    EXPECT_THROW(read_csv(unterminated), InputError);
    EXPECT_THROW(ingest(data("does-not-exist.csv"), ""), InputError);
}

TEST(Cli, NegativeValueExitsTwo) {
    const auto r = invoke({"measure", "-i", data("negative.csv")});
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, EmptyFileExitsTwo) {
    const auto r = invoke({"measure", "-i", data("empty.csv")});
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("empty dataset"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitInput);
    EXPECT_EQ(invoke({"measure"}).code, kExitInput);
    EXPECT_EQ(invoke({"measure", "-i", data("pair.csv"), "--measure", "gini"}).code, kExitInput);
    EXPECT_EQ(invoke({"measure", "-i", data("pair.csv"), "--format", "xml"}).code, kExitInput);
    EXPECT_EQ(invoke({"measure", "-i", data("pair.csv"), "--precision", "40"}).code, kExitInput);
    EXPECT_EQ(invoke({"decompose", "-i", data("xor.csv"), "--attrs", "A"}).code, kExitInput);
    EXPECT_EQ(invoke({"decompose", "-i", data("xor.csv"), "--attrs", "A,Q"}).code, kExitInput);
    EXPECT_EQ(invoke({"subgroup", "-i", data("regions.csv")}).code, kExitInput);
    EXPECT_EQ(invoke({"subgroup", "-i", data("regions.csv"), "--group-by", "region", "--measure", "pietra"}).code,
              kExitInput);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, NumericErrorsExitThree) {
    EXPECT_EQ(invoke({"decompose", "-i", data("zeros.csv"), "--measure", "mld"}).code, kExitNumeric);
    EXPECT_EQ(invoke({"shapley", "-i", data("zeros.csv"), "--measure", "mld"}).code, kExitNumeric);
}

TEST(Cli, MeasurePietra) {
    const auto j = invoke_json({"measure", "-i", data("pair.csv"), "--measure", "pietra"});
    EXPECT_EQ(j["measure"], "pietra");
    EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.25);
}

TEST(Cli, MeasureInfiniteSentinel) {
    const auto j = invoke_json({"measure", "-i", data("zeros.csv"), "--measure", "mld"});
    EXPECT_EQ(j["value"], "inf");
}

TEST(Cli, MeasureAtkinsonAndGrouped) {
    auto j = invoke_json({"measure", "-i", data("pair.csv"), "--measure", "atkinson:1", "--precision", "12"});
    EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.133974596216);
    j = invoke_json({"measure", "-i", data("regions.csv"), "--group-by", "region", "--precision", "6"});
    EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.056633);
}

TEST(Cli, LorenzUniformCsv) {
    const auto r = invoke({"lorenz", "-i", data("uniform.csv")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "x,y\n0,0\n1,1\n");
}

TEST(Cli, LorenzJson) {
    const auto j = invoke_json({"lorenz", "-i", data("pair.csv"), "--format", "json"});
    EXPECT_EQ(j["vertices"].dump(), "[[0,0],[0.5,0.75],[1,1]]");
}

TEST(Cli, DecomposeXor) {
    const auto j = invoke_json({"decompose", "-i", data("xor.csv"), "--attrs", "A,B", "--measure", "theil"});
    EXPECT_EQ(j["attributes"], (std::vector<std::string>{"A", "B"}));
    EXPECT_EQ(j["components"]["redundant"].get<double>(), 0.0);
    EXPECT_EQ(j["components"]["unique"]["A"].get<double>(), 0.0);
    EXPECT_EQ(j["components"]["unique"]["B"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(j["components"]["synergy"].get<double>(), 0.130812);
    EXPECT_DOUBLE_EQ(j["total"].get<double>(), 0.130812);
    ASSERT_EQ(j["lattice"].size(), 4u);
    EXPECT_EQ(j["lattice"][0]["node"], "[[A],[B]]");
    EXPECT_EQ(j["lattice"][3]["node"], "[[A,B]]");
}

TEST(Cli, DecomposeAtkinsonRed) {
    const auto j = invoke_json({"decompose", "-i", data("red.csv"), "--measure", "atkinson:1"});
    EXPECT_DOUBLE_EQ(j["components"]["redundant"].get<double>(), 0.133975);
    EXPECT_EQ(j["components"]["synergy"].get<double>(), 0.0);
}

TEST(Cli, ShapleyRed) {
    const auto j = invoke_json({"shapley", "-i", data("red.csv")});
    EXPECT_DOUBLE_EQ(j["values"]["A"].get<double>(), 0.065406);
    EXPECT_DOUBLE_EQ(j["values"]["B"].get<double>(), 0.065406);
    EXPECT_EQ(j["efficiency_check"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(j["interactions"]["A|B"].get<double>(), -0.130812);
}

TEST(Cli, SubgroupRegions) {
    const auto j = invoke_json({"subgroup", "-i", data("regions.csv"), "--group-by", "region"});
    EXPECT_DOUBLE_EQ(j["between"].get<double>(), 0.056633);
    EXPECT_DOUBLE_EQ(j["total"].get<double>(), 0.187445);
    EXPECT_DOUBLE_EQ(j["reconstruction"].get<double>(), 0.187445);
    ASSERT_EQ(j["within"].size(), 2u);
    EXPECT_EQ(j["within"][1]["group"], "r2");
    EXPECT_DOUBLE_EQ(j["within"][1]["weight"].get<double>(), 0.666667);
}

TEST(Cli, ByteIdenticalReruns) {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"decompose", "-i", data("xor.csv")},
             {"shapley", "-i", data("xor.csv"), "--measure", "ge:2"},
             {"subgroup", "-i", data("regions.csv"), "--group-by", "region", "--format", "csv"},
             {"lorenz", "-i", data("regions.csv"), "--group-by", "region"}}) {
        const auto a = invoke(cmd);
        const auto b = invoke(cmd);
        EXPECT_EQ(a.code, kExitOk) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, LoggingGoesToStderr) {
    ::setenv("INEQLAB_LOG", "info", 1);
    const auto r = invoke({"measure", "-i", data("pair.csv")});
    ::unsetenv("INEQLAB_LOG");
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("loaded 2 records"), std::string::npos);
    EXPECT_EQ(r.out.find("loaded"), std::string::npos);
    EXPECT_TRUE(invoke({"measure", "-i", data("pair.csv")}).err.empty());
}

} // namespace
} // namespace ineqlab::cli
