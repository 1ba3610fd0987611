#include <gtest/gtest.h>

#include "common.hpp"
#include "skewnet/fixture.hpp"
#include "skewnet/pipeline.hpp"

using namespace skewnet;
using nlohmann::json;
using skewnet::testing::degenerate;
using skewnet::testing::smooth_net;

namespace {
Options quick() {
  Options o;
  o.samples = 50;
  return o;
}
}  // namespace

TEST(Pipeline, CheckNames) {
  const auto& names = check_names();
  EXPECT_EQ(names.front(), "regularity");
  EXPECT_EQ(names.size(), 22u);
  EXPECT_THROW(run_check("nope", smooth_net()), std::invalid_argument);
}

TEST(Pipeline, SmoothFixturePasses) {
  const auto rep = run_pipeline(smooth_net(), quick());
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.witness;
  EXPECT_EQ(rep.overall, Status::Pass);
  EXPECT_EQ(rep.checks.size(), check_names().size());
  const auto j = rep.to_json();
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["fingerprint"], fingerprint(smooth_net()));
  EXPECT_FALSE(j["checks"][0].contains("seconds"));
  EXPECT_TRUE(rep.to_json(true)["checks"][0].contains("seconds"));
  EXPECT_FALSE(j["options"].contains("workers"));
}

TEST(Pipeline, BlockNetStopsAtRegularity) {
  const auto rep = run_pipeline(ANet::block_net(Field::rationals()), quick());
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].status, Status::Fail);
  EXPECT_NE(rep.checks[0].witness.find("rank"), std::string::npos);
  EXPECT_EQ(rep.stopped_after, "regularity");
  EXPECT_EQ(exit_code(rep.overall), 1);
}

TEST(Pipeline, DegenerateNetClassifiesAndDefers) {
  const auto rep = run_pipeline(degenerate(), quick());
  EXPECT_EQ(rep.checks[1].name, "classify");
  EXPECT_EQ(rep.checks[1].status, Status::Pass) << rep.checks[1].witness;
  for (const auto& f : rep.checks[1].data["fields"]) {
    EXPECT_TRUE(f["sets_equal"].get<bool>());
    EXPECT_FALSE(f["sing_x"].empty());
  }
  EXPECT_EQ(rep.overall, Status::Inconclusive);
  EXPECT_EQ(exit_code(rep.overall), 2);
}

TEST(Pipeline, SingleChecks) {
  const auto h = run_check("hilbert-C", smooth_net());
  EXPECT_EQ(h.status, Status::Pass);
  EXPECT_NE(h.witness.find("25*t - 25"), std::string::npos);
  const auto c = run_check("charge2-table", smooth_net());
  EXPECT_EQ(c.status, Status::Pass);
  EXPECT_FALSE(c.text.empty());
  EXPECT_EQ(run_check("regularity", ANet::block_net(Field::rationals())).status, Status::Fail);
}

TEST(Pipeline, ShapeRequirements) {
  const ANet net = random_regular_net(1, 3, 4, 6).net;
  EXPECT_EQ(run_check("theta-table", net).status, Status::Pass);
  EXPECT_EQ(run_check("q-quartic", net).status, Status::Inconclusive);
}

TEST(Pipeline, ReportsAreDeterministic) {
  Options o = quick();
  const auto a = run_pipeline(smooth_net(2), o).to_json().dump();
  o.workers = 3;
  const auto b = run_pipeline(smooth_net(2), o).to_json().dump();
  EXPECT_EQ(a, b);
}

TEST(Pipeline, ReportDiff) {
  json a = json::parse(R"({"x": 1, "checks": [{"seconds": 1.0, "v": [1, 2]}]})");
  json b = json::parse(R"({"x": 1, "checks": [{"seconds": 9.0, "v": [1, 2]}]})");
  EXPECT_TRUE(diff_reports(a, b).identical());
  b["checks"][0]["v"][1] = 3;
  b["y"] = true;
  const auto d = diff_reports(a, b);
  ASSERT_EQ(d.differences.size(), 2u);
  EXPECT_EQ(d.differences[0], "/checks/0/v/1: 2 != 3");
  EXPECT_EQ(d.differences[1], "/y: missing on the left");
}

TEST(Pipeline, ExitCodes) {
  EXPECT_EQ(exit_code(Status::Pass), 0);
  EXPECT_EQ(exit_code(Status::Fail), 1);
  EXPECT_EQ(exit_code(Status::Inconclusive), 2);
  EXPECT_EQ(combine(Status::Pass, Status::Inconclusive), Status::Inconclusive);
  EXPECT_EQ(combine({Status::Inconclusive, Status::Fail, Status::Pass}), Status::Fail);
}
