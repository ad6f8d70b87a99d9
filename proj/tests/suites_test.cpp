#include <gtest/gtest.h>

#include <sstream>

#include "rectrep/suites.hpp"

using namespace rectrep;

TEST(Suites, UpperPassesOnASmallRun) {
  suites::Options options;
  options.max_n = 6;
  options.samples = 150;
  options.seed = 3;
  options.orders_per_sample = 3;
  const suites::Report report = suites::run_upper(options);
  std::ostringstream out;
  report.print(out);
  EXPECT_TRUE(report.passed()) << out.str();
  EXPECT_NE(out.str().find("n=4: pairs without bad quartet = n! * plane(n)  (552 vs 552 of 576)"),
            std::string::npos)
      << out.str();
}

TEST(Suites, LowerPassesOnASmallRun) {
  suites::Options options;
  options.max_n = 5;
  options.samples = 40;
  const suites::Report report = suites::run_lower(options);
  std::ostringstream out;
  report.print(out);
  EXPECT_TRUE(report.passed()) << out.str();
}

TEST(Suites, ReportFormatsFailures) {
  suites::Report report;
  report.checks.push_back({"first", true, "1 cases"});
  report.checks.push_back({"second", false, "broken"});
  std::ostringstream out;
  report.print(out);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(out.str(), "PASS  first  (1 cases)\nFAIL  second  (broken)\nsome checks FAILED\n");
}
