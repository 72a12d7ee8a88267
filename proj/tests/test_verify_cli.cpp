#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "heron/cli.hpp"
#include "heron/verify.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = heron::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_erratum(const heron::VerificationReport& r, const std::string& row,
                 const std::string& field, const std::string& paper,
                 const std::string& computed) {
  return std::any_of(r.errata.begin(), r.errata.end(), [&](const heron::Erratum& e) {
    return e.row == row && e.field == field && e.paper_value == paper &&
           e.computed_value == computed;
  });
}

}  // namespace

TEST(Verify, SampleTable) {
  const auto r = heron::verify_sample_table();
  EXPECT_EQ(r.rows_checked, 15u);
  EXPECT_EQ(r.rows_matching, 15u);
  EXPECT_TRUE(r.errata.empty());
  EXPECT_TRUE(r.ok());
}

TEST(Verify, GeneratedTable) {
  const auto r = heron::verify_generated_table();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.rows_reproduced, 15u);
  EXPECT_TRUE(has_erratum(r, "row 3", "b", "627", "629"));
  EXPECT_TRUE(has_erratum(r, "row 15", "b", "415", "405"));
  EXPECT_TRUE(has_erratum(r, "row 15", "c", "415", "405"));
  EXPECT_TRUE(has_erratum(r, "row 10", "b", "204", "205"));
  EXPECT_TRUE(has_erratum(r, "row 11", "b", "81", "117"));
  EXPECT_TRUE(has_erratum(r, "row 5", "factorization", "2^2*d*5^2*7^2*17", "2^2*3*5^2*7^2*17"));
  EXPECT_TRUE(has_erratum(r, "row 4", "factorization", "2^2*3^2*5*7*11", "2^2*3^2*5^2*7*11"));
  EXPECT_TRUE(has_erratum(r, "row 8", "factorization", "2^3*3^4*7^2*11^2", "2^2*3^2*7^2*11*97"));
  EXPECT_EQ(r.errata.size(), 8u);
  EXPECT_EQ(r.rows_matching + 7u, r.rows_checked);  // seven rows carry errata
  // Each side erratum: printed sides fail the square test, corrected pass.
  for (const auto& e : r.errata) {
    if (e.field == "factorization") continue;
    EXPECT_NE(e.justification.find("irrational area"), std::string::npos);
  }
}

TEST(Verify, FactorizationTable) {
  const auto r = heron::verify_factorization_table();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.rows_reproduced, 7u);
  EXPECT_EQ(r.rows_matching, 5u);
  EXPECT_TRUE(has_erratum(r, "row 5", "D2", "1", "2"));
  EXPECT_TRUE(has_erratum(r, "row 6", "c", "3", "5"));
  EXPECT_EQ(r.errata.size(), 2u);
}

TEST(Verify, Prose) {
  const auto r = heron::verify_prose();
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_erratum(r, "case 5 example", "d", "8", "4"));
  EXPECT_TRUE(has_erratum(r, "case 7 example", "case", "7", "6"));
  EXPECT_TRUE(has_erratum(r, "case 7 example", "delta", "8", "4"));
  EXPECT_TRUE(has_erratum(r, "solid 12", "area formula x y z d^2/4", "4", "12"));
}

TEST(Verify, Lists) {
  const auto reports = heron::verify_lists();
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) EXPECT_TRUE(r.ok()) << r.table_id;
  EXPECT_TRUE(has_erratum(reports[0], "list", "value", "296", "396"));
  EXPECT_EQ(reports[0].errata.size(), 1u);
  EXPECT_TRUE(has_erratum(reports[1], "list", "value", "420", "absent"));
  EXPECT_TRUE(has_erratum(reports[1], "list", "value", "absent", "240"));
  EXPECT_EQ(reports[1].errata.size(), 5u);
  EXPECT_TRUE(has_erratum(reports[2], "list", "value", "absent", "48"));
  EXPECT_EQ(reports[3].errata.size(), 14u);
  EXPECT_TRUE(has_erratum(reports[4], "count", "Pythagorean", "31", "34"));
  EXPECT_TRUE(has_erratum(reports[5], "triangle 2", "hypotenuse", "20", "29"));
}

TEST(Verify, Oracles) {
  EXPECT_FALSE(heron::detail::brute_force_has_area(296));
  EXPECT_TRUE(heron::detail::brute_force_has_area(396));
  EXPECT_FALSE(heron::detail::brute_force_is_pythagorean(420));
  EXPECT_TRUE(heron::detail::brute_force_is_pythagorean(240));
  EXPECT_TRUE(heron::detail::solid_oracle(48));
  EXPECT_FALSE(heron::detail::solid_oracle(36));
  EXPECT_EQ(heron::detail::evaluate_factorization("2^2*3^5"), heron::Int(972));
  EXPECT_FALSE(heron::detail::evaluate_factorization("2^2*d"));
  EXPECT_EQ(heron::detail::factorization_string(8502732), "2^2*3^4*7*23*163");
}

TEST(Cli, SolveListsSampleRows) {
  const auto r = run({"solve", "--lmax", "9", "--normalized"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("9 3 90 5 13 18 6 23"), std::string::npos);
  EXPECT_NE(r.out.find("1 1 2 1 1 2 2 3"), std::string::npos);
  const auto scaled = run({"solve", "--lmax", "1", "--normalized", "--scale-pow2", "1"});
  EXPECT_NE(scaled.out.find("2 2 8 2 2 4 4 6"), std::string::npos);
  EXPECT_NE(scaled.out.find("2 solutions"), std::string::npos);
}

TEST(Cli, Generate) {
  auto r = run({"generate", "--solution", "1", "2", "2", "3", "--scale", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sides"], nlohmann::json({8, 5, 5}));
  EXPECT_EQ(j["area"], 12);
  r = run({"generate", "--param", "5", "1", "1", "--scale", "2"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["sides"], nlohmann::json({104, 629, 725}));
  r = run({"generate", "--solution", "1", "2", "2", "3", "--scale", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ScaleParityError"), std::string::npos);
  r = run({"generate", "--scale", "2"});
  EXPECT_EQ(r.code, 2);
  r = run({"generate", "--param", "1", "1", "1", "--solution", "1", "2", "2", "3", "--scale",
           "2"});
  EXPECT_EQ(r.code, 2);
  r = run({"generate", "--param", "1", "1", "3", "--scale", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DivisibilityError"), std::string::npos);
}

TEST(Cli, CatalogCsv) {
  const auto r = run({"catalog", "--limit", "999", "--class", "area", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "value,is_area,is_pythagorean,is_solid,witness_a,witness_b,witness_c");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 96);
  EXPECT_NE(r.out.find("\n6,1,1,0,5,4,3\n"), std::string::npos);
}

TEST(Cli, CatalogJsonSchema) {
  const auto r = run({"catalog", "--limit", "100", "--class", "solid", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);  // 12 and 48
  EXPECT_EQ(j[0]["value"], 12);
  EXPECT_EQ(j[0]["classes"], nlohmann::json({"area", "solid"}));
  const auto& w = j[1]["witnesses"][0];
  EXPECT_EQ(w["sides"], nlohmann::json({16, 10, 10}));
  EXPECT_EQ(w["area"], 48);
  EXPECT_EQ(w["solid_witness"]["xyzt"], nlohmann::json({1, 2, 2, 3}));
  EXPECT_EQ(w["solid_witness"]["d"], 4);
  const auto paper = run({"catalog", "--limit", "999", "--class", "solid", "--solid-mode",
                          "paper", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(paper.out).size(), 2u);
}

TEST(Cli, CatalogDeterministicAcrossJobs) {
  const auto a = run({"catalog", "--limit", "600", "--format", "json"});
  const auto b = run({"catalog", "--limit", "600", "--format", "json", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CatalogOutFile) {
  const std::string path = ::testing::TempDir() + "heron_catalog.csv";
  const auto r = run({"catalog", "--limit", "100", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"catalog", "--limit", "100", "--format", "csv"}).out);
  std::remove(path.c_str());
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "210"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 210);
  EXPECT_EQ(j["classes"], nlohmann::json({"area", "pythagorean"}));
  int right = 0;
  for (const auto& w : j["witnesses"]) {
    const auto s = w["sides"];
    right += s[0].get<int>() * s[0].get<int>() ==
             s[1].get<int>() * s[1].get<int>() + s[2].get<int>() * s[2].get<int>();
  }
  EXPECT_EQ(right, 2);
  EXPECT_EQ(run({"classify", "12", "--limit", "5"}).code, 2);
}

TEST(Cli, Decompose) {
  auto r = run({"decompose", "25", "17", "12"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["d23"], 5);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["area"], 90);
  EXPECT_TRUE(j["solid_witness"].is_null());
  j = nlohmann::json::parse(run({"decompose", "8", "5", "5"}).out);
  EXPECT_EQ(j["solid_witness"]["xyzt"], nlohmann::json({1, 2, 2, 3}));
  r = run({"decompose", "1", "1", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("IrrationalAreaError"), std::string::npos);
  r = run({"decompose", "1", "2", "3"});
  EXPECT_NE(r.err.find("TriangleInequalityError"), std::string::npos);
}

TEST(Cli, Conjecture) {
  const auto r = run({"conjecture", "--limit", "999"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no counterexample"), std::string::npos);
}

TEST(Cli, VerifyPaper) {
  auto r = run({"verify-paper", "--table", "sample"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checked 15, exact 15"), std::string::npos);
  r = run({"verify-paper"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("627 -> 629"), std::string::npos);
  r = run({"verify-paper", "--table", "final", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["rows_reproduced"], 7);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  auto r = run({"catalog", "--limit", "10", "--class", "triangle"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--class"), std::string::npos);
  r = run({"solve", "--lmax", "abc"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--lmax"), std::string::npos);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"decompose", "3", "4"}).code, 2);
  EXPECT_EQ(run({"verify-paper", "--table", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
