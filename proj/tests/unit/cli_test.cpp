#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

namespace yamabe::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "yamabe");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) {
    if (!line.empty()) {
      result.push_back(line);
    }
  }
  return result;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "yamabe_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Cli, BoundThreeTwo) {
  const auto r = invoke({"bound", "--v", "3", "--w", "2", "--gamma", "0.63", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["ratio"].get<double>(), 0.5714, 5e-4);
  EXPECT_GE(doc["value"].get<double>(), 45.1);
  EXPECT_EQ(doc["formula"], "general");
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["k"], 2);
}

TEST(Cli, BoundTwoTwoUsesRegistryGamma) {
  const auto r = invoke({"bound", "--v", "2", "--w", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["gamma"].get<double>(), 0.68);
  EXPECT_GE(doc["value"].get<double>(), 38.9);
}

TEST(Cli, MissingGammaExitsThree) {
  const auto r = invoke({"bound", "--v", "3", "--w", "3"});
  EXPECT_EQ(r.code, kExitMissingConstant);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("3,3"), std::string::npos);
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(invoke({"bound", "--v", "1", "--w", "3", "--gamma", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--gamma", "1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--formula", "general-refined"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--formula", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--grid", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"squeeze", "--v", "1", "--c", "1", "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"squeeze", "--v", "2", "--c", "0", "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"squeeze", "--v", "2", "--c", "1", "--r", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "table9"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(Cli, NumericalFailureExitsFour) {
  const auto r = invoke({"squeeze", "--v", "3", "--c", "1", "--r", "1e200"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("t = "), std::string::npos);
}

TEST(Cli, Table1Csv) {
  const auto r = invoke({"table", "table1", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].rfind("v,w,n,k,gamma,analytic,numeric,mu1", 0), 0u);
  EXPECT_EQ(rows[1].rfind("2,2,4,1,0.68,38.9,38.9,61.56,", 0), 0u);
  EXPECT_EQ(rows[6].rfind("4,2,6,3,0.56885,36.4,49.9,96.30,", 0), 0u);
}

TEST(Cli, TableTnAndSigma) {
  const auto tn = invoke({"table", "tn", "--format", "csv"});
  ASSERT_EQ(tn.code, kExitOk) << tn.err;
  const auto tn_rows = lines(tn.out);
  ASSERT_EQ(tn_rows.size(), 10u);
  EXPECT_EQ(tn_rows[2].rfind("4,?,unknown,61.5", 0), 0u);
  EXPECT_EQ(tn_rows[7].rfind("9,109.2,", 0), 0u);

  const auto sigma = invoke({"table", "sigma", "--format", "json"});
  ASSERT_EQ(sigma.code, kExitOk) << sigma.err;
  const auto doc = nlohmann::json::parse(sigma.out);
  ASSERT_EQ(doc.size(), 4u);
  EXPECT_EQ(doc[0]["dimension"], 5);
  EXPECT_TRUE(doc[2]["strict"].get<bool>());
  EXPECT_FALSE(doc[3]["strict"].get<bool>());
  EXPECT_TRUE(doc[1]["caveat"].get<bool>());
}

TEST(Cli, Squeeze) {
  const auto r = invoke({"squeeze", "--v", "2", "--c", "1", "--r", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["f"].get<double>(), 2.0 * std::asinh(1.0), 1e-10);
  EXPECT_NEAR(doc["f_prime"].get<double>(), 1.0 / std::sqrt(2.0), 1e-10);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"bound", "--v", "2", "--w", "7", "--format", "json"},
        std::vector<std::string>{"table", "table1", "--format", "json"},
        std::vector<std::string>{"table", "tn", "--format", "json"},
        std::vector<std::string>{"table", "sigma", "--format", "json"},
        std::vector<std::string>{"squeeze", "--v", "4", "--c", "0.3", "--r", "1.7", "--format",
                                 "json"}}) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out) << args[1];
  }
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

TEST(Cli, CsvIgnoresGlobalLocale) {
  const auto reference = invoke({"table", "table1", "--format", "csv"});
  const std::locale previous =
      std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const auto localized = invoke({"table", "table1", "--format", "csv"});
  std::locale::global(previous);
  EXPECT_EQ(reference.out, localized.out);
  for (const auto& row : lines(localized.out)) {
    const auto unquoted_end = std::find(row.begin(), row.end(), '"');
    EXPECT_EQ(std::count(row.begin(), unquoted_end, ','), 13) << row;
  }
}

TEST(Cli, RegistryOverride) {
  const auto path = scratch("registry.json");
  {
    std::ofstream file(path);
    file << R"({"3,3": {"gamma": 0.5, "source": "test value"}})";
  }
  const auto r = invoke({"bound", "--v", "3", "--w", "3", "--registry", path.string(), "--format",
                         "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["gamma_source"], "test value");

  // The override replaces the defaults rather than merging with them.
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--registry", path.string()}).code,
            kExitMissingConstant);

  const auto empty = scratch("empty.json");
  {
    std::ofstream file(empty);
    file << "{}";
  }
  EXPECT_EQ(invoke({"table", "table1", "--registry", empty.string()}).code, kExitMissingConstant);
  // w = 2, v >= 4 still has the built-in product formula.
  EXPECT_EQ(invoke({"bound", "--v", "4", "--w", "2", "--registry", empty.string()}).code, kExitOk);
  EXPECT_EQ(invoke({"bound", "--v", "2", "--w", "2", "--registry", "/nonexistent/r.json"}).code,
            kExitUsage);
}

TEST(Cli, OutFileIsWrittenWhole) {
  const auto path = scratch("table1.csv");
  std::filesystem::remove(path);
  const auto r = invoke({"table", "table1", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  EXPECT_EQ(contents.str(), invoke({"table", "table1", "--format", "csv"}).out);
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
}

}  // namespace
}  // namespace yamabe::cli
