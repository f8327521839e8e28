#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace jumpgraph;

namespace {

const VerificationReport& report_upto6() {
  static const VerificationReport report = run_all(fixtures::catalog_upto(6));
  return report;
}

}  // namespace

TEST(RunAll, EveryCheckPassesUpToSix) {
  const auto& r = report_upto6();
  ASSERT_EQ(r.checks.size(), 10u);
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, CheckStatus::pass) << c.id;
    EXPECT_EQ(c.failures, 0u) << c.id;
    EXPECT_EQ(c.unresolved, 0u) << c.id;
    EXPECT_GT(c.tested, 0u) << c.id;
  }
  EXPECT_TRUE(r.passed());
}

TEST(RunAll, RosterIds) {
  std::vector<std::string> ids;
  for (const auto& c : standard_checks()) ids.push_back(c.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V10"}));
}

TEST(RunAll, ReportsAreByteIdentical) {
  const auto again = run_all(fixtures::catalog_upto(6));
  EXPECT_EQ(format_text(again), format_text(report_upto6()));
  EXPECT_EQ(format_machine(again), format_machine(report_upto6()));
}

TEST(RunAll, OnlySelectedChecks) {
  const auto r = run_all(fixtures::catalog_upto(5), {}, {"V1", "V9"});
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].id, "V1");
  EXPECT_EQ(r.checks[1].id, "V9");
}

TEST(RunAll, EmptyCatalogIsRejected) { EXPECT_THROW(run_all(GraphCatalog("none")), std::invalid_argument); }

TEST(RunAll, MachineFormat) {
  const auto r = run_all(fixtures::catalog_upto(4), {}, {"V1"});
  EXPECT_EQ(format_machine(r), "V1\t18\t0\tPASS\n");
  EXPECT_NE(format_text(r).find("overall: PASS"), std::string::npos);
  EXPECT_NE(format_text(r), format_text(r, true));
}

TEST(Replay, PassingInstancesReplay) {
  const auto& cat = fixtures::catalog_upto(5);
  EXPECT_EQ(replay("V1", "Dhc", cat), Outcome::pass);
  EXPECT_EQ(replay("V9", to_graph6(graphs::matching(3)), cat), Outcome::pass);
  EXPECT_EQ(replay("V2", encode_instance({graphs::cycle(5), graphs::path(5)}), cat), Outcome::pass);
  EXPECT_THROW(replay("V99", "Dhc", cat), std::invalid_argument);
}

TEST(Replay, FailurePayloadsReproduce) {
  // A deliberately false statement: every graph has a connected jump.
  Check bogus{"X", "J(G) connected", "every catalog graph",
              [](const VerifyContext& ctx) { return detail::each_graph(ctx, [](const Graph&) { return true; }); },
              [](const VerifyContext&, const Instance& in) { return detail::verdict(is_connected(jump(in.at(0)))); }};
  const auto& cat = fixtures::catalog_upto(4);
  VerifyContext ctx(cat, {});
  const auto r = run_check(bogus, ctx);
  EXPECT_EQ(r.status, CheckStatus::fail);
  ASSERT_FALSE(r.failing.empty());
  for (const auto& f : r.failing) {
    EXPECT_EQ(f.check_id, "X");
    EXPECT_EQ(bogus.predicate(ctx, decode_instance(f.payload)), Outcome::fail);
    // The same input fed to the real V9 predicate, outside its scope.
    const Graph g = decode_instance(f.payload).at(0);
    if (g.size() > 0 && isolated_vertices(g) == 0 && is_connected(g)) {
      EXPECT_EQ(replay("V9", f.payload, cat), Outcome::fail);
    }
  }
}

TEST(Payload, RoundTrip) {
  const Instance in{graphs::petersen(), Graph(), graphs::net()};
  const Instance out = decode_instance(encode_instance(in));
  EXPECT_EQ(out, in);
}

TEST(Checks, SevenVertexPropertySuites) {
  const auto r = run_all(fixtures::catalog_upto(7), {}, {"V5", "V6", "V7", "V8"});
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.failures, 0u) << c.id;
    EXPECT_EQ(c.unresolved, 0u) << c.id;
  }
}
