#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "dispatch.hpp"
#include "secant/serialize.hpp"

using secant::Json;
namespace cli = secant::cli;

namespace {

struct Run {
  int code;
  Json report;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::dispatch(args, in, out, err);
  Json j;
  if (!out.str().empty() && out.str().front() == '{') j = Json::parse(out.str());
  return {code, j, err.str()};
}

}  // namespace

TEST(Cli, Envelope) {
  const auto r = run({"codim", "--shape", "2,2,2,2", "--r", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.report.at("tool"), "secant");
  EXPECT_EQ(r.report.at("command"), "codim");
  EXPECT_TRUE(r.report.contains("version"));
  EXPECT_TRUE(r.report.contains("config"));
  EXPECT_EQ(r.report.at("codim"), 6);
}

TEST(Cli, Multiplicity) {
  auto r = run({"multiplicity", "--d", "4", "--parts", "[2,1,1]", "[2,1,1]", "[2,1,1]"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.report.at("multiplicity"), 1);
  EXPECT_EQ(r.report.at("classes").size(), 5u);
  r = run({"multiplicity", "--d", "3", "--parts", "[2,1]", "[2,1]", "[2,1]", "[2,1]"});
  EXPECT_EQ(r.report.at("multiplicity"), 3);
  EXPECT_EQ(run({"multiplicity", "--d", "3", "--parts", "[2,1,1]"}).code, cli::kExitUsage);
}

TEST(Cli, Decompose) {
  const auto r = run({"decompose", "--d", "3", "--dims", "2,2,2,2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.report.at("total_dimension"), 816);
}

TEST(Cli, TensorPipelineAndMembership) {
  auto t = run({"tensor", "random", "--shape", "3,3,3", "--rank", "3", "--seed", "5"});
  ASSERT_EQ(t.code, cli::kExitOk) << t.err;
  EXPECT_EQ(t.report.at("config").at("seed"), 5);
  const std::string tensor = t.report.dump();

  auto e = run({"equations", "eval", "--family", "strassen"}, tensor);
  ASSERT_EQ(e.code, cli::kExitOk) << e.err;
  EXPECT_TRUE(e.report.at("all_zero").get<bool>());

  auto m = run({"membership", "--r", "3"}, tensor);
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_EQ(m.report.at("verdict"), "passes-all-implemented-equations");
  EXPECT_EQ(m.report.at("meaning"), "necessary condition only");

  auto g = run({"tensor", "random", "--shape", "2,2,2,2", "--generic", "--seed", "9"});
  auto gm = run({"membership", "--r", "2"}, g.report.dump());
  EXPECT_EQ(gm.report.at("verdict"), "violates-equations");
  EXPECT_TRUE(gm.report.contains("witness"));

  auto f = run({"tensor", "flatten", "--split", "1,2"}, g.report.dump());
  ASSERT_EQ(f.code, cli::kExitOk) << f.err;
  EXPECT_EQ(f.report.at("rows"), 4);
  EXPECT_EQ(f.report.at("rank"), 4);
}

TEST(Cli, Jacobian) {
  const Json x = secant::to_json(secant::diagonal_tensor(secant::Shape({3, 3, 3}), 3, secant::RationalField{}));
  const auto r = run({"equations", "jacobian", "--family", "strassen"}, x.dump());
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.report.at("ranks")[0].at("rank"), 6);
  EXPECT_EQ(r.report.at("ranks")[1].at("rank"), 6);
  EXPECT_EQ(r.report.at("codim"), 6);
}

TEST(Cli, ResolutionChecks) {
  auto b = run({"betti-check", "--case", "3factor"});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  EXPECT_TRUE(b.report.at("all_agree").get<bool>());
  auto h = run({"hilbert-compare", "--case", "4factor", "--dmax", "4"});
  ASSERT_EQ(h.code, cli::kExitOk) << h.err;
  EXPECT_TRUE(h.report.at("all_agree").get<bool>());
  auto l = run({"length-budget", "--shape", "3,3,3", "--r", "3"});
  EXPECT_EQ(l.report.at("budget"), 6);
}

TEST(Cli, BottTwistedFlag) {
  auto ok = run({"bott", "--shape", "3,3,3", "--r", "3", "--d", "2", "--twisted", "[6]", "[]", "[]"});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  auto flagged = run({"bott", "--shape", "3,3,3", "--r", "3", "--d", "2", "--twisted", "[7]", "[]", "[]"});
  EXPECT_EQ(flagged.code, cli::kExitCheckFailed);
  EXPECT_FALSE(flagged.report.at("twisted_dual").at("hypothesis_holds").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"codim", "--shape", "2,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"membership", "--r", "2"}, "not json").code, cli::kExitUsage);
  const auto ni = run({"equations", "gen", "--family", "secant", "--shape", "3,3,3,3", "--r", "3"});
  EXPECT_EQ(ni.code, cli::kExitUsage);
  EXPECT_NE(ni.err.find("not implemented"), std::string::npos);
}

TEST(Cli, InstalledBinaryRuns) {
  const std::string cmd = std::string(SECANT_TOOL_PATH) + " codim --shape 3,3,3 --r 3 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
}

TEST(Cli, DeterministicOutput) {
  const auto raw = [](std::vector<std::string> args) {
    std::istringstream in;
    std::ostringstream out, err;
    cli::dispatch(args, in, out, err);
    return out.str();
  };
  const std::vector<std::string> random{"--seed", "11", "tensor", "random", "--shape", "2,3,3", "--rank", "2"};
  EXPECT_EQ(raw(random), raw(random));
  const auto one = run({"--threads", "1", "hilbert", "--ideal", "flat4", "--dmax", "5"});
  const auto three = run({"--threads", "3", "hilbert", "--ideal", "flat4", "--dmax", "5"});
  ASSERT_EQ(one.code, cli::kExitOk) << one.err;
  EXPECT_EQ(one.report.at("hilbert"), three.report.at("hilbert"));
  EXPECT_EQ(one.report.at("hilbert")[5].at("H"), 12352);
}
