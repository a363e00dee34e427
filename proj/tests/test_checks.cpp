#include "qtwist/checks.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qtwist;

namespace {

CheckConfig config(const char* check, const char* type = "A2", int deg = 2) {
  CheckConfig c;
  c.check = check;
  c.type = type;
  c.deg = deg;
  return c;
}

}  // namespace

TEST(Checks, Catalog) {
  const auto& checks = list_checks();
  EXPECT_EQ(checks.size(), 11u);
  std::set<std::string> names;
  for (const auto& c : checks) {
    names.insert(c.name);
    EXPECT_FALSE(c.anchor.empty()) << c.name;
  }
  for (const char* n : {"hopf-axioms", "derivations", "module-algebra", "cocycle", "phi-iso", "bigraded",
                        "positive-parts", "dn-variant", "pairing", "gram-rank", "category"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_NE(checks[4].anchor.find("cocycle twist theorem"), std::string::npos);
  EXPECT_NE(checks[10].anchor.find("category equivalence theorem"), std::string::npos);
}

TEST(Checks, ResolveCartan) {
  CheckConfig c = config("pairing", "A");
  c.rank = 3;
  EXPECT_EQ(resolve_cartan(c).label(), "A3");
  c.type = "A2";
  EXPECT_THROW(resolve_cartan(c), ConfigError);
  c.type = "A";
  c.rank = 0;
  EXPECT_THROW(resolve_cartan(c), ConfigError);
}

TEST(Checks, Validation) {
  EXPECT_THROW(validate(config("phi-iso", "Z9")), ConfigError);
  EXPECT_THROW(validate(config("nosuch")), ConfigError);
  EXPECT_THROW(validate(config("dn-variant", "A2")), ConfigError);
  EXPECT_NO_THROW(validate(config("dn-variant", "D4")));
  EXPECT_THROW(validate(config("pairing", "A2", 0)), ConfigError);
  CheckConfig c = config("cocycle");
  c.variant = "tau";
  EXPECT_THROW(validate(c), ConfigError);
  c.variant = "sigma-prime";
  EXPECT_NO_THROW(validate(c));
  c = config("bigraded");
  c.variant = "dn";
  EXPECT_THROW(validate(c), ConfigError);
  c = config("gram-rank");
  c.variant = "q";
  EXPECT_THROW(validate(c), ConfigError);
  EXPECT_THROW(run_check(config("phi-iso", "Z9")), ConfigError);
}

TEST(Checks, PassingRun) {
  CheckReport r = run_check(config("pairing", "A2", 2));
  EXPECT_EQ(r.status, "pass");
  EXPECT_GT(r.report.cases, 0u);
  EXPECT_EQ(r.config.variant, "all");
  r = run_check(config("gram-rank", "B2", 3));
  EXPECT_EQ(r.status, "pass");
}

TEST(Checks, ErrorStatus) {
  CheckConfig c = config("category", "A2");
  c.modules = {"w1+"};
  CheckReport r = run_check(c);
  EXPECT_EQ(r.status, "error");
  EXPECT_FALSE(r.error.empty());
}

TEST(Checks, FailuresReplayExactly) {
  for (const char* check : {"derivations", "pairing"}) {
    CheckConfig c = config(check, "A2", 2);
    c.variant = "printed";
    CheckReport r = run_check(c);
    ASSERT_EQ(r.status, "fail") << check;
    ASSERT_FALSE(r.report.failures.empty());
    CheckReport back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    ASSERT_EQ(back.report.failures.size(), r.report.failures.size());
    for (const auto& f : back.report.failures) {
      EXPECT_NE(f.residual, "0");
      EXPECT_EQ(replay(f), f.residual) << f.property;
    }
  }
}

TEST(Checks, JsonRoundTripAndDeterminism) {
  CheckConfig c = config("module-algebra", "A2", 2);
  c.trials = 5;
  c.seed = 77;
  CheckReport a = run_check(c), b = run_check(c);
  nlohmann::json ja = to_json(a), jb = to_json(b);
  ja.erase("seconds");
  jb.erase("seconds");
  EXPECT_EQ(ja, jb);
  CheckReport back = report_from_json(to_json(a));
  EXPECT_EQ(back.config.seed, 77u);
  EXPECT_EQ(back.report.cases, a.report.cases);
  EXPECT_EQ(back.status, a.status);
  for (const char* key : {"check", "config", "status", "counterexamples", "seconds"})
    EXPECT_TRUE(to_json(a).contains(key)) << key;
}

TEST(Checks, PropertyNamesAreUnique) {
  std::set<std::string> seen;
  for (const auto& p : all_properties()) EXPECT_TRUE(seen.insert(p.name).second) << p.name;
}

TEST(Checks, SpecNames) {
  auto d4 = CartanDatum::parse("D4");
  EXPECT_EQ(spec_by_name(d4, "rs-prime")->name(), "rs-prime");
  EXPECT_EQ(spec_by_name(d4, "q")->name(), "q");
  EXPECT_THROW(spec_by_name(d4, "x"), std::invalid_argument);
  Counterexample c{"no-such-property", "A2", "rs", {}, "0"};
  EXPECT_THROW(replay(c), std::invalid_argument);
}
