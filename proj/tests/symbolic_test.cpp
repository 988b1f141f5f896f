#include <gtest/gtest.h>

#include "tpcalc/symbolic.hpp"

using namespace tpcalc;

TEST(LNIndex, CanonicalForm) {
  EXPECT_EQ(LNIndex({0, 1, 0, 0}).to_string(), "01");
  EXPECT_EQ(LNIndex({0, 0}).to_string(), "0");
  EXPECT_TRUE(LNIndex::parse("0").empty());
  EXPECT_EQ(LNIndex::parse("101").weight(), 4);
  EXPECT_EQ(LNIndex::parse("21").degree(-1), 3);
  EXPECT_EQ(LNIndex::parse("0").degree(1), 1);
  EXPECT_THROW(LNIndex({12}).to_string(), Error);
  EXPECT_THROW(LNIndex::parse("1a"), ParseError);
}

TEST(SymbolicExpr, ChernConventions) {
  EXPECT_EQ(SymbolicExpr::chern(1, 0).to_string(), "1");
  EXPECT_TRUE(SymbolicExpr::chern(1, -2).is_zero());
  EXPECT_EQ(SymbolicExpr::chern(1, 3).to_string(), "c3");
}

TEST(SymbolicExpr, PrintingOrder) {
  SymbolicExpr e = parse_expr("2*s_01 + 2*s_2 - 3*s_1*s_0 + s_0^3", 1);
  EXPECT_EQ(e.side(), Side::Target);
  EXPECT_EQ(e.to_string(), "s_0^3 - 3*s_0*s_1 + 2*s_2 + 2*s_01");
  EXPECT_EQ(parse_expr("2*c2 + 2*c1^2", 1).to_string(), "2*c1^2 + 2*c2");
  EXPECT_EQ(parse_expr("0", 1).to_string(), "0");
}

TEST(SymbolicExpr, RoundTrip) {
  for (const char* text : {"s_0^3 - 3*s_0*s_1 + 2*s_2 + 2*s_01", "138*s_4 - 158*s_21 + 20*s_101 + 2*s_02 - 2*s_0001",
                           "1/2*fs_0^2 - fs_0*c1 - 1/2*fs_1 + c1^2 + c2", "-c1", "0", "-7/3*c1^3 + 8*c1*c2 - c3"}) {
    SymbolicExpr e = parse_expr(text, -1);
    EXPECT_EQ(e.to_string(), text);
    EXPECT_EQ(parse_expr(e.to_string(), -1), e);
  }
}

TEST(SymbolicExpr, Degrees) {
  EXPECT_TRUE(parse_expr("s_0^3 - 3*s_0*s_1 + 2*s_2 + 2*s_01", 1).is_homogeneous(3));
  EXPECT_TRUE(parse_expr("s_2 - s_01", -1).is_homogeneous(1));
  EXPECT_FALSE(parse_expr("c1 + c2", 1).degree().has_value());
  EXPECT_EQ(parse_expr("fs_0 - c1", 1).degree(), 1);
}

TEST(SymbolicExpr, SideDiscipline) {
  EXPECT_THROW(parse_expr("s_0 + c1", 1), Error);
  EXPECT_THROW(parse_expr("fs_0", 1, Side::Target), Error);
  EXPECT_THROW(parse_expr("s_0", 1) + parse_expr("c1", 1), Error);
  EXPECT_THROW(parse_expr("c1", 1) + parse_expr("c1", 2), Error);
  EXPECT_THROW(parse_expr("c0", 1), ParseError);
  EXPECT_THROW(parse_expr("x1", 1), ParseError);
}

TEST(SymbolicExpr, FormalPushforwards) {
  SymbolicExpr R = parse_expr("138*c1^4 - 158*c1^2*c2 + 2*c2^2 + 20*c1*c3 - 2*c4", -1);
  EXPECT_EQ(push_chern(R), parse_expr("138*s_4 - 158*s_21 + 2*s_02 + 20*s_101 - 2*s_0001", -1));
  EXPECT_EQ(pull_push_chern(parse_expr("1 - c1", 1)), parse_expr("fs_0 - fs_1", 1));
  EXPECT_EQ(push_source(parse_expr("fs_0^2 - fs_1 - 2*fs_0*c1 + 2*c1^2 + 2*c2", 1)),
            parse_expr("s_0^3 - s_0*s_1 - 2*s_0*s_1 + 2*s_2 + 2*s_01", 1));
}
