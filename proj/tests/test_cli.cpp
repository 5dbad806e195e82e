#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "cyclocode/cli.hpp"

using namespace cyclocode;
using cli::run_captured;

namespace {

// Strips TeX markup and our separators, then splits on '+'.
std::set<std::string> normalized_terms(std::string s) {
    std::string flat;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '_' || ch == '{' || ch == '}' || ch == '*') continue;
        flat += ch;
    }
    std::set<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= flat.size(); ++i) {
        if (i == flat.size() || flat[i] == '+') {
            terms.insert(flat.substr(start, i - start));
            start = i + 1;
        }
    }
    return terms;
}

std::string cwe_line(const std::string& text) {
    const auto pos = text.find("CWE: ");
    return text.substr(pos + 5, text.find('\n', pos) - pos - 5);
}

struct PaperText {
    std::vector<std::string> args;
    std::string tex;
};

} // namespace

TEST(Cli, ComputeJsonSchema) {
    const auto r = run_captured({"compute", "--p", "2", "--m", "6", "--N", "3", "--classes", "1", "--method", "all",
                                 "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "EQUAL");
    EXPECT_EQ(j["summary"], (Json{{"n", 21}, {"k", 6}, {"d", 8}}));
    EXPECT_EQ(j["cwe"][0]["composition"], (Json{21, 0}));
    EXPECT_EQ(j["cwe"][2]["multiplicity"], 42);
    EXPECT_EQ(j["periods"], (Json{5, -3, -3}));
    EXPECT_EQ(j["griesmer"]["bound"], 17);
    EXPECT_TRUE(j["griesmer"].contains("optimal"));
    EXPECT_EQ(j["params"]["classes"], (Json{1}));
}

TEST(Cli, TernaryPairTerms) {
    const auto r = run_captured({"compute", "--p", "3", "--m", "4", "--N", "4", "--classes", "0,1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["summary"], (Json{{"n", 40}, {"k", 4}, {"d", 24}}));
    ASSERT_EQ(j["cwe"].size(), 3u);
    EXPECT_EQ(j["cwe"][0]["multiplicity"], 1);
    EXPECT_EQ(j["cwe"][1]["multiplicity"], 40);
    EXPECT_EQ(j["cwe"][2]["multiplicity"], 40);
}

TEST(Cli, FullDefiningSetNotesMissingTheorem) {
    const auto r =
        run_captured({"compute", "--p", "2", "--m", "6", "--N", "3", "--classes", "0,1,2", "--method", "brute"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("CWE: w0^63 + 63*w0^31*w1^32"), std::string::npos);
    EXPECT_NE(r.out.find("note: formula comparison skipped"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"compute", "--p", "5", "--m", "4", "--N", "4", "--classes", "0,3", "--format", "json"},
             {"compute", "--p", "2", "--m", "6", "--N", "3", "--classes", "0,1,2", "--format", "json"},
             {"compute", "--p", "2", "--m", "5", "--N", "31", "--classes", "0", "--method", "brute", "--format",
              "json"}}) {
        const auto r = run_captured(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto j = Json::parse(r.out);
        const CweReport rep = report_from_json(j);
        EXPECT_EQ(to_json(rep), j);
        EXPECT_EQ(to_json(rep).dump(2) + "\n", r.out);
    }
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"compute", "--p", "3", "--m", "6", "--N", "4", "--classes", "1,2",
                                        "--format", "json", "--threads", "3"};
    const auto a = run_captured(args);
    const auto b = run_captured(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto single = args;
    single.back() = "1";
    EXPECT_EQ(run_captured(single).out, a.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_captured({"compute", "--p", "4", "--m", "2", "--N", "3", "--classes", "1"}).code,
              cli::kExitParameter);
    EXPECT_EQ(run_captured({"compute", "--p", "2", "--m", "6", "--N", "3", "--classes", "3"}).code,
              cli::kExitParameter);
    EXPECT_EQ(run_captured({"compute", "--p", "2", "--m", "6", "--N", "3", "--classes", "1", "--method", "nope"}).code,
              cli::kExitParameter);
    const auto bad = run_captured({"compute", "--p", "7", "--m", "2", "--N", "3", "--classes", "1", "--method",
                                   "theorem"});
    EXPECT_EQ(bad.code, cli::kExitParameter);
    EXPECT_NE(bad.err.find("N = 3 does not divide (r-1)/(p-1) = 8"), std::string::npos);
    EXPECT_EQ(run_captured({"compute", "--p", "2", "--m", "20", "--N", "3", "--classes", "0,1,2"}).code,
              cli::kExitCapacity);
    EXPECT_EQ(run_captured({"field", "--p", "2", "--m", "30"}).code, cli::kExitCapacity);
    EXPECT_EQ(run_captured({"bogus"}).code, cli::kExitParameter);
    EXPECT_EQ(run_captured({}).code, cli::kExitParameter);
}

TEST(Cli, FieldReport) {
    const auto r = run_captured({"field", "--p", "2", "--m", "6"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["modulus"], (Json{1, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(j["r"], 64);
    EXPECT_EQ(j["divisibility"]["3"]["divides_r_minus_1"], true);
    EXPECT_EQ(j["divisibility"]["3"]["divides_r_minus_1_over_p_minus_1"], true);

    const auto t = Json::parse(run_captured({"field", "--p", "3", "--m", "4"}).out);
    EXPECT_EQ(t["r"], 81);
    EXPECT_EQ(t["divisibility"]["4"]["divides_r_minus_1"], true);
    EXPECT_EQ(t["divisibility"]["4"]["divides_r_minus_1_over_p_minus_1"], true);

    const auto f = Json::parse(run_captured({"field", "--p", "2", "--m", "4"}).out);
    EXPECT_EQ(f["divisibility"]["3"]["divides_r_minus_1_over_p_minus_1"], true);
    EXPECT_EQ(f["divisibility"]["4"]["divides_r_minus_1"], false);
}

TEST(Cli, PeriodsReport) {
    const auto r = run_captured({"periods", "--p", "2", "--m", "6", "--N", "3"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["eta"], (Json{5, -3, -3}));
    EXPECT_EQ(j["period_polynomial"], (Json{-45, -21, 1, 1}));
    EXPECT_EQ(j["closed_form"]["multiset_equal"], true);
    EXPECT_EQ(run_captured({"periods", "--p", "5", "--m", "2", "--N", "4"}).code, cli::kExitParameter);
}

TEST(Cli, VerifyGaussScope) {
    const auto r = run_captured({"verify", "--gauss", "--max-r", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_GT(j["total"].get<int>(), 0);
    for (const auto& c : j["checks"]) EXPECT_EQ(c["check"].get<std::string>().rfind("gauss/", 0), 0u);
}

TEST(Cli, VerifyReportsFailuresWithIdentity) {
    // The GF(9), N = 4 single-class codes have dimension 1 < m.
    const auto r = run_captured({"verify", "--sweep", "--max-r", "9"});
    EXPECT_EQ(r.code, cli::kExitMismatch);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["failed"], 4);
    for (const auto& c : j["checks"]) {
        if (!c["pass"].get<bool>()) {
            EXPECT_EQ(c["check"], "theorem_dimension");
            EXPECT_EQ(c["p"], 3);
            EXPECT_EQ(c["m"], 2);
            EXPECT_EQ(c["N"], 4);
            EXPECT_EQ(c["I"].size(), 1u);
        }
    }
}

// Published enumerators in TeX form, compared up to markup and term order.
TEST(Cli, TextMatchesPublishedTermLists) {
    const std::vector<PaperText> cases = {
        {{"2", "6", "3", "1"}, "w_0^{21}+21w_0^{13}w_1^{8}+42w_0^{9}w_1^{12}"},
        {{"2", "6", "3", "0,1"}, "w_0^{42}+42w_0^{22}w_1^{20}+21w_0^{18}w_1^{24}"},
        {{"3", "4", "4", "1"}, "w_0^{20}+60w_0^{8}w_1^{6}w_2^{6}+20w_0^{2}w_1^{9}w_2^{9}"},
        {{"3", "4", "4", "0,1"}, "w_0^{40}+40w_0^{16}w_1^{12}w_2^{12}+40w_0^{10}w_1^{15}w_2^{15}"},
        {{"3", "4", "4", "0,1,2"}, "w_0^{60}+20w_0^{24}w_1^{18}w_2^{18}+60w_0^{18}w_1^{21}w_2^{21}"},
        {{"5", "4", "4", "1"},
         "w_0^{156}+156w_0^{44}(w_1 w_2 w_3 w_4)^{28}+156w_0^{32}(w_1 w_2 w_3 w_4)^{31}"
         "+156w_0^{28}(w_1 w_2 w_3 w_4)^{32}+156w_0^{20}(w_1 w_2 w_3 w_4)^{34}"},
        {{"5", "4", "4", "1,3"}, "w_0^{312}+312w_0^{72}(w_1 w_2 w_3 w_4)^{60}+312w_0^{52}(w_1 w_2 w_3 w_4)^{65}"},
        {{"5", "4", "4", "0,3"},
         "w_0^{312}+156w_0^{76}(w_1 w_2 w_3 w_4)^{59}+156w_0^{64}(w_1 w_2 w_3 w_4)^{62}"
         "+156w_0^{60}(w_1 w_2 w_3 w_4)^{63}+156w_0^{48}(w_1 w_2 w_3 w_4)^{66}"},
        {{"5", "4", "4", "0,1,2"},
         "w_0^{468}+156w_0^{104}(w_1 w_2 w_3 w_4)^{91}+156w_0^{96}(w_1 w_2 w_3 w_4)^{93}"
         "+156w_0^{92}(w_1 w_2 w_3 w_4)^{94}+156w_0^{80}(w_1 w_2 w_3 w_4)^{97}"},
    };
    for (const auto& c : cases) {
        const auto r = run_captured({"compute", "--p", c.args[0], "--m", c.args[1], "--N", c.args[2], "--classes",
                                     c.args[3]});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(normalized_terms(cwe_line(r.out)), normalized_terms(c.tex)) << r.out;
    }
}
