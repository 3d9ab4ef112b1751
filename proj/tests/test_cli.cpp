#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "test_support.hpp"

using namespace facon;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(Command command, const std::string& input, Format format = Format::Json, std::int64_t bound = 2) {
    RunConfig config;
    config.command = command;
    config.input = input;
    config.format = format;
    config.options.max_exponent = bound;
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(Run, AnalyzeThreeVariableExample) {
    const auto r = run_cli(Command::Analyze, fixtures::data_path("exfacon"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    std::vector<std::string> labels;
    for (const auto& f : j["facons"]) labels.push_back(f["label"]);
    EXPECT_EQ(labels, (std::vector<std::string>{"(3)[1]", "(3)[2]", "(3)[1,2]"}));
    std::vector<std::size_t> dims;
    for (const auto& l : j["filtration"]) dims.push_back(l["dimension"]);
    EXPECT_EQ(dims, (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_EQ(j["frontier"], true);
    EXPECT_EQ(j["scope"]["E"], 2);
    EXPECT_EQ(j["scope"]["D"], 4);
    EXPECT_EQ(j["scope"]["version"], kVersion);
}

TEST(Run, CountFacons) {
    RunConfig config;
    config.command = Command::CountFacons;
    config.n = 3;
    std::ostringstream out, err;
    EXPECT_EQ(run(config, out, err), 0);
    EXPECT_EQ(out.str(), "19\n");
    config.n = 0;
    EXPECT_EQ(run(config, out, err), kExitInput);
}

TEST(Run, VerifyCusp) {
    const auto r = run_cli(Command::Verify, fixtures::data_path("cusp"));
    EXPECT_EQ(r.code, 0) << r.out;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["oracle"]["agrees"], true);
    for (const auto& c : j["numeric_checks"]) EXPECT_EQ(c["passed"], true);
}

TEST(Run, VerifyMismatchExitsThree) {
    const auto path = temp_file("facon_mismatch.map", "vars x1 x2; 5000*x1*x2; x2\n");
    EXPECT_EQ(run_cli(Command::Verify, path, Format::Text, 1).code, kExitMismatch);
}

TEST(Run, ParseErrorDiagnostic) {
    const auto path = temp_file("facon_bad.map", "vars x1; x2\n");
    const auto r = run_cli(Command::Analyze, path);
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_EQ(r.err, path + ":1:10: error: unknown variable x2\n");
    EXPECT_TRUE(r.out.empty());
}

TEST(Run, MissingFile) {
    const auto r = run_cli(Command::Analyze, "/nonexistent/facon.map");
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Run, InvalidOptions) {
    RunConfig config;
    config.input = fixtures::data_path("cusp");
    config.options.degree = 0;
    std::ostringstream out, err;
    EXPECT_EQ(run(config, out, err), kExitInput);
}

TEST(Run, StratifyOmitsCatalog) {
    const auto r = run_cli(Command::Stratify, fixtures::data_path("cusp"));
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_FALSE(j.contains("facons"));
    EXPECT_TRUE(j.contains("strata"));
}

TEST(Run, TextReportUsesEtoileNotation) {
    const auto r = run_cli(Command::Analyze, fixtures::data_path("cone"), Format::Text);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(1,3)[2]^{0*}"), std::string::npos);
    EXPECT_NE(r.out.find("a1*a2 - a3^2 = 0"), std::string::npos);
    EXPECT_NE(r.out.find("frontier: true"), std::string::npos);
    EXPECT_NE(r.out.find("filtration: dim 2"), std::string::npos);
}

TEST(Run, ReportsAreByteDeterministic) {
    for (const auto& name : fixtures::bundled()) {
        const auto first = run_cli(Command::Analyze, fixtures::data_path(name));
        const auto second = run_cli(Command::Analyze, fixtures::data_path(name));
        EXPECT_EQ(first.out, second.out) << name;
    }
}

TEST(Run, PolynomialsInReportReparse) {
    for (const auto& name : fixtures::bundled()) {
        const auto r = run_cli(Command::Analyze, fixtures::data_path(name));
        const auto j = Json::parse(r.out);
        const auto f = parse_mapping(j["mapping"].get<std::string>());
        EXPECT_EQ(f.components, fixtures::load(name).components);
        for (const auto& s : j["strata"]) {
            for (const auto& eq : s["implicit_eqs"]) {
                const auto text = eq.get<std::string>();
                EXPECT_EQ(parse_polynomial(text, Space::Target, f.n).to_string(), text);
            }
        }
        for (const auto& facon : j["facons"]) {
            for (const auto& cls : facon["classes"]) {
                for (const auto& comp : cls["limit"]) {
                    const auto text = comp.get<std::string>();
                    EXPECT_EQ(parse_polynomial(text, Space::Parameter, f.n).to_string(), text);
                }
            }
        }
    }
}
