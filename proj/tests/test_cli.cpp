#include <gtest/gtest.h>

#include <sstream>

#include "ehrtensor/cli.hpp"
#include "ehrtensor/json_io.hpp"

using namespace ehrtensor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command_line(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kT2 = R"({"vertices": [[0,0],[1,0],[0,1]]})";
const std::string k3T2 = R"({"vertices": [[0,0],[3,0],[0,3]]})";

}  // namespace

TEST(Json, RationalAndTensorRoundTrip) {
  EXPECT_EQ(rational_to_json(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(Json("1/0")), InputError);
  SymTensor t(2, 10);
  t.set({10, 0}, Rational(1, 3));
  t.set({9, 1}, Rational(-2));
  const auto j = tensor_to_json(t);
  // Keys follow multi-index order, not string order.
  EXPECT_EQ(j["coords"].begin().key(), "9,1");
  EXPECT_EQ(tensor_from_json(j), t);
  EXPECT_THROW(tensor_from_json(Json::parse(R"({"dim":2,"rank":1,"coords":{"1,1":"1"}})")), InputError);
}

TEST(Json, PolytopeValidation) {
  EXPECT_EQ(polytope_from_json(Json::parse(kT2)).vertices().size(), 3u);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices": [[0,0],[1]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices": [[0.5,0]]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"points": []})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices": [[0,0,0,0,0,0,0]]})")), InputError);
  EXPECT_TRUE(polytope_from_json(Json::parse(R"({"vertices": [], "dim": 2})")).is_empty());
}

TEST(Cli, Count) {
  const auto r = run_cli({"count"}, k3T2);
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["closed"], 10);
  EXPECT_EQ(j["relint"], 1);
}

TEST(Cli, EhrhartScalarCoefficients) {
  const auto r = run_cli({"ehrhart", "--r", "0"}, kT2);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coords"]["0,0"], "1");
  EXPECT_EQ(j[1]["coords"]["0,0"], "3/2");
  EXPECT_EQ(j[2]["coords"]["0,0"], "1/2");
}

TEST(Cli, Reciprocity) {
  const auto r = run_cli({"reciprocity", "--r", "0"}, k3T2);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["relint"]["coords"]["0,0"], "1");
  EXPECT_EQ(j["alternating_sum"]["coords"]["0,0"], "1");
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(Cli, CovarianceAndEquivariance) {
  EXPECT_EQ(run_cli({"covariance", "--r", "2", "--y", "1,1"}, kT2).code, 0);
  EXPECT_EQ(run_cli({"equivariance", "--r", "2", "--matrix", "1,1;0,1"}, kT2).code, 0);
  EXPECT_EQ(run_cli({"equivariance", "--r", "2", "--seed", "5", "--steps", "6"}, kT2).code, 0);
  EXPECT_EQ(run_cli({"equivariance", "--r", "2", "--matrix", "0,1;1,0"}, kT2).code, 2);
  EXPECT_EQ(run_cli({"covariance", "--r", "2", "--y", "1"}, kT2).code, 2);
}

TEST(Cli, Nval) {
  const auto r = run_cli({"nval"}, R"({"vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["coords"].empty());
  const auto checked = run_cli({"nval", "--check-independence", "5"}, R"({"vertices": [[0,0],[3,0],[1,3]]})");
  ASSERT_EQ(checked.code, 0) << checked.err;
  EXPECT_TRUE(Json::parse(checked.out)["independence"]["passed"].get<bool>());
  EXPECT_EQ(run_cli({"nval"}, R"({"vertices": [[0,0,0]]})").code, 2);
}

TEST(Cli, Rank) {
  const auto r = run_cli({"rank", "--n", "3", "--r", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["kernel_dim"], 0);
  EXPECT_EQ(j["unknowns"], 15);
  const auto planar = Json::parse(run_cli({"rank", "--n", "2", "--r", "3", "--parity", "1", "--kernel"}).out);
  EXPECT_EQ(planar["kernel_dim"], 1);
  EXPECT_EQ(planar["kernel"].size(), 1u);
  const auto survey = run_cli({"rank", "--survey", "--survey-ranks", "9", "11"});
  EXPECT_EQ(survey.code, 0);
  EXPECT_NE(survey.out.find("9,relation+theta(+1),10,8,2,8,yes,yes"), std::string::npos) << survey.out;
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"count"}, "{not json").code, 2);
  EXPECT_EQ(run_cli({"ehrhart", "--r", "13"}, kT2).code, 2);
  EXPECT_EQ(run_cli({"ehrhart", "--r", "1"}, R"({"vertices": []})").code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"rank", "--n", "9", "--r", "3"}).code, 2);
  EXPECT_EQ(run_cli({"rank", "--n", "2", "--r", "21"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--input", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"nval", "--check-independence", "4", "--seed", "3"};
  const std::string poly = R"({"vertices": [[0,0],[4,1],[1,3]]})";
  EXPECT_EQ(run_cli(args, poly).out, run_cli(args, poly).out);
}
