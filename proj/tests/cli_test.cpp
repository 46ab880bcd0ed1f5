#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "matrix_file.hpp"

namespace optrig::cli {
namespace {

using Json = nlohmann::json;

const std::string kData = OPTRIG_TEST_DATA_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(MatrixFile, ParsesAndChecksums) {
  const MatrixFile f = read_matrix_file(data("ex35.json"));
  EXPECT_EQ(f.matrix.dim(), 2);
  EXPECT_EQ(f.matrix(1, 1), Complex(1.0, 1.0));
  ASSERT_TRUE(f.name.has_value());
  EXPECT_EQ(f.checksum.rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(f.checksum.size(), 8u + 16u);
  EXPECT_EQ(fnv1a64_hex(""), "fnv1a64:cbf29ce484222325");

  const Json round = matrix_to_json(f.matrix, f.name);
  EXPECT_EQ(parse_matrix_json(round).data(), f.matrix.data());
}

TEST(MatrixFile, RejectsMalformed) {
  for (const char* body : {"{", "[]", R"({"n": 2})", R"({"n": 0, "entries": []})",
                           R"({"n": 1, "entries": [[[1, 0]]], "extra": 1})", R"({"n": 1, "entries": [[[1]]]})",
                           R"({"n": 1, "entries": [[["1", 0]]]})", R"({"n": 2, "entries": [[[1, 0], [0, 0]]]})",
                           R"({"n": 1.5, "entries": [[[1, 0]]]})", R"({"n": 1, "entries": [[[1, 0]]], "name": 3})"}) {
    const std::string path = write_temp("bad.json", body);
    EXPECT_THROW(read_matrix_file(path), InputError) << body;
  }
  EXPECT_THROW(read_matrix_file(kData + "/does_not_exist.json"), InputError);
}

TEST(Cli, CosExample) {
  const Invocation r = invoke({"cos", "--matrix", data("ex35.json"), "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "cos");
  EXPECT_NEAR(j["results"]["cos"].get<double>(), 0.7071068, 1e-6);
  EXPECT_NEAR(j["results"]["epsilon0"].get<double>(), 0.5, 1e-6);
  EXPECT_EQ(j["inputs"]["relative_to"], "identity");
  EXPECT_EQ(j["witnesses"]["antieigenvector"].size(), 2u);
}

TEST(Cli, TotalCosExampleWithVerify) {
  const Invocation r = invoke({"total-cos", "--matrix", data("ex35.json"), "--verify", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["results"]["total_cos"].get<double>(), 0.9101797, 1e-6);
  EXPECT_NEAR(j["results"]["lambda0"][0].get<double>(), 0.7071068, 1e-6);
  EXPECT_NEAR(j["results"]["lambda0"][1].get<double>(), -0.2928932, 1e-6);
  EXPECT_LE(std::abs(j["diagnostics"]["total_cos_oracle_delta"].get<double>()), 1e-3);
}

TEST(Cli, OrthogonalExample) {
  const Invocation r = invoke({"orthogonal", "--matrix", data("t10.json"), "--relative-to", data("a01.json"), "--output",
                        "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["results"]["orthogonal"].get<bool>());
  EXPECT_EQ(j["results"]["w0"][0].get<double>(), 0.0);
  EXPECT_EQ(j["results"]["w0"][1].get<double>(), 0.0);
}

TEST(Cli, EveryCommandVerifies) {
  const std::vector<std::vector<std::string>> cases = {
      {"cos", "--matrix", data("ex35.json")},
      {"cos", "--complex", "--matrix", data("ex35.json")},
      {"sin", "--matrix", data("ex35.json")},
      {"center-of-mass", "--matrix", data("ex35.json")},
      {"center-of-mass", "--complex", "--matrix", data("ex35.json")},
      {"center-of-mass", "--matrix", data("t10.json"), "--relative-to", data("a01.json")},
      {"orthogonal", "--matrix", data("t10.json"), "--relative-to", data("a01.json")},
      {"orthogonal", "--complex", "--matrix", data("t10.json"), "--relative-to", data("a01.json")},
      {"orthogonal", "--matrix", data("ex35.json")},
      {"w0", "--matrix", data("ex35.json")},
      {"minmax", "--matrix", data("ex35.json")},
      {"minmax", "--complex", "--matrix", data("ex35.json")},
  };
  for (auto args : cases) {
    args.push_back("--verify");
    const Invocation r = invoke(args);
    EXPECT_EQ(r.code, kOk) << args[0] << ": " << r.err;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kInputError);
  EXPECT_EQ(invoke({"cos"}).code, kInputError);
  EXPECT_EQ(invoke({"cos", "--matrix", data("ex35.json"), "--output", "yaml"}).code, kInputError);
  EXPECT_EQ(invoke({"cos", "--matrix", data("ex35.json"), "--relative-to", data("t10.json")}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);

  const Invocation missing = invoke({"cos", "--matrix", kData + "/nope.json"});
  EXPECT_EQ(missing.code, kInputError);
  EXPECT_NE(missing.err.find("nope.json"), std::string::npos);

  const std::string bad = write_temp("malformed.json", R"({"n": 2, "entries": [[[1, 0]]]})");
  const Invocation malformed = invoke({"sin", "--matrix", bad});
  EXPECT_EQ(malformed.code, kInputError);
  EXPECT_NE(malformed.err.find("malformed.json"), std::string::npos);

  // diag(1, 0) is neither accretive nor invertible
  const Invocation na = invoke({"cos", "--matrix", data("t10.json"), "--output", "json"});
  EXPECT_EQ(na.code, kPrecondition);
  EXPECT_EQ(Json::parse(na.out)["error"]["kind"], "NotAccretive");
  EXPECT_EQ(invoke({"total-cos", "--matrix", data("t10.json")}).code, kPrecondition);
  EXPECT_EQ(invoke({"center-of-mass", "--matrix", data("ex35.json"), "--relative-to", data("zero.json")}).code,
            kPrecondition);

  const Invocation restricted = invoke({"total-cos", "--matrix", data("t10.json"), "--allow-singular", "--output", "json"});
  ASSERT_EQ(restricted.code, kOk) << restricted.err;
  EXPECT_TRUE(Json::parse(restricted.out)["results"]["restricted_to_range"].get<bool>());
}

TEST(Cli, JsonRoundTripsByteIdentical) {
  for (const char* cmd : {"cos", "total-cos", "w0", "center-of-mass"}) {
    const Invocation r = invoke({cmd, "--matrix", data("ex35.json"), "--output", "json"});
    ASSERT_EQ(r.code, kOk);
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
  }
}

TEST(Cli, IdenticalInvocationsIdenticalReports) {
  const std::vector<std::string> args = {"minmax", "--complex", "--matrix", data("ex35.json"), "--seed", "17",
                                         "--verify", "--output", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("OPTRIG_SEED", "123", 1);
  const Invocation env = invoke({"cos", "--matrix", data("ex35.json"), "--output", "json"});
  ::unsetenv("OPTRIG_SEED");
  EXPECT_EQ(Json::parse(env.out)["diagnostics"]["seed"], 123);
  const Invocation flag = invoke({"cos", "--matrix", data("ex35.json"), "--seed", "5", "--output", "json"});
  EXPECT_EQ(Json::parse(flag.out)["diagnostics"]["seed"], 5);
}

void flatten(const Json& j, const std::string& prefix, std::map<std::string, std::vector<double>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (const auto& v : j) {
      std::map<std::string, std::vector<double>> inner;
      flatten(v, prefix, inner);
      for (double d : inner[prefix]) out[prefix].push_back(d);
    }
  } else if (j.is_number()) {
    out[prefix].push_back(j.get<double>());
  }
}

TEST(Cli, TextAndJsonCarrySameNumbers) {
  for (const char* cmd : {"cos", "total-cos", "minmax"}) {
    const Invocation js = invoke({cmd, "--matrix", data("ex35.json"), "--output", "json"});
    const Invocation tx = invoke({cmd, "--matrix", data("ex35.json")});
    ASSERT_EQ(js.code, kOk);
    ASSERT_EQ(tx.code, kOk);
    std::map<std::string, std::vector<double>> expected;
    flatten(Json::parse(js.out), "", expected);

    std::istringstream lines(tx.out);
    std::string line;
    std::size_t matched = 0;
    while (std::getline(lines, line)) {
      const auto eq = line.find(" = ");
      ASSERT_NE(eq, std::string::npos) << line;
      const std::string key = line.substr(0, eq);
      if (!expected.count(key) || expected[key].empty()) continue;
      std::string values = line.substr(eq + 3);
      for (char& c : values)
        if (c == '[' || c == ']' || c == ',') c = ' ';
      std::istringstream vs(values);
      std::vector<double> got;
      for (double d; vs >> d;) got.push_back(d);
      ASSERT_EQ(got.size(), expected[key].size()) << key;
      for (std::size_t i = 0; i < got.size(); ++i) {
        const double want = expected[key][i];
        EXPECT_LE(std::abs(got[i] - want), 5e-7 * std::max(std::abs(want), 1e-300) + 1e-300) << key;
      }
      ++matched;
    }
    EXPECT_EQ(matched, expected.size()) << cmd;
  }
}

}  // namespace
}  // namespace optrig::cli
