#include <gtest/gtest.h>

#include "contactlie/suite.hpp"
#include "helpers.hpp"

using namespace contactlie;
using namespace testing_helpers;

namespace {

SuiteOptions small(std::uint64_t seed) {
  SuiteOptions o;
  o.seed = seed;
  o.pairs = 60;
  o.triples = 20;
  o.functionals = 2;
  return o;
}

const PropertyResult& find(const SuiteReport& r, const std::string& name) {
  for (const auto& p : r.properties)
    if (p.name == name) return p;
  throw std::runtime_error("missing property " + name);
}

}  // namespace

TEST(Suite, AllPropertiesPassOnStandardConfigs) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    const auto report = run_suite(c, small(3));
    EXPECT_TRUE(report.ok()) << render_report(c, small(3), report);
    EXPECT_EQ(report.properties.size(), 7u);
  }
}

TEST(Suite, RenderingIsDeterministic) {
  auto c = config(standard_config_texts()[1]);
  const auto a = render_report(c, small(5), run_suite(c, small(5)));
  const auto b = render_report(c, small(5), run_suite(c, small(5)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("result: PASS"), std::string::npos);
  EXPECT_NE(a, render_report(c, small(6), run_suite(c, small(6))));
}

TEST(Suite, CorruptedBracketBreaksJacobiOnly) {
  auto c = single_block(1, J0Mode::kNaturals);
  SuiteOptions o = small(1);
  o.bracket = corrupted_bracket(c);
  const auto report = run_suite(c, o);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(find(report, "antisymmetry").failed, 0u);
  const auto& j = find(report, "jacobi");
  EXPECT_GT(j.failed, 0u);
  EXPECT_FALSE(j.witness.empty());
  EXPECT_NE(render_report(c, o, report).find("result: FAIL"), std::string::npos);
}

TEST(Suite, SkipsWithReason) {
  auto c = single_block(4, J0Mode::kZero);
  const auto report = run_suite(c, small(1));
  const auto& rt = find(report, "round-trip");
  EXPECT_TRUE(rt.skipped);
  EXPECT_FALSE(rt.note.empty());
  EXPECT_TRUE(find(report, "eigen-relations").skipped);
  EXPECT_TRUE(report.ok());
}
