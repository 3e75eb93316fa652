#include <gtest/gtest.h>

#include "ellipuc/table_io.hpp"

using namespace ellipuc;

TEST(TableIo, ShortestDoubles) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(TableIo, CsvAndJson) {
  Table t;
  t.columns = {"n", "x", "tag"};
  t.add_row({0LL, 0.5, std::string("a")});
  t.add_row({1LL, std::monostate{}, std::string("b")});
  EXPECT_EQ(to_csv(t), "n,x,tag\n0,0.5,a\n1,,b\n");
  const auto js = to_json(t, "demo");
  EXPECT_NE(js.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(js.find("null"), std::string::npos);
  EXPECT_EQ(js, to_json(t, "demo"));
  EXPECT_THROW(t.add_row({0LL}), std::exception);
}

TEST(TableIo, Report) {
  Report r;
  r.command = "verify";
  r.config = {{"family", "cn"}};
  r.add("ok", 1e-15, 1e-9);
  r.add("bad", 1e-3, 1e-9);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failed_names(), std::vector<std::string>{"bad"});
  const auto js = to_json(r);
  EXPECT_NE(js.find("\"passed\": false"), std::string::npos);
  EXPECT_EQ(js, to_json(r));
}
