#include <gtest/gtest.h>

#include "gitss/repdata.hpp"

namespace gitss {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::MalformedForm;
}

std::int64_t bound(const char* t) { return adjoint_low_height_bound(parse_dynkin(t)); }

TEST(LowHeightBound, Table) {
  EXPECT_EQ(bound("A1"), 2);
  EXPECT_EQ(bound("A7"), 14);
  EXPECT_EQ(bound("B2"), 6);
  EXPECT_EQ(bound("B5"), 18);
  EXPECT_EQ(bound("C3"), 10);
  EXPECT_EQ(bound("D3"), 6);
  EXPECT_EQ(bound("D4"), 10);
  EXPECT_EQ(bound("G2"), 10);
  EXPECT_EQ(bound("F4"), 22);
  EXPECT_EQ(bound("E6"), 22);
  EXPECT_EQ(bound("E7"), 34);
  EXPECT_EQ(bound("E8"), 58);
}

TEST(LowHeightBound, GrowsWithRank) {
  for (int n = 1; n < 30; ++n) {
    EXPECT_LT(adjoint_low_height_bound({DynkinFamily::A, n}), adjoint_low_height_bound({DynkinFamily::A, n + 1}));
    if (n >= 2) EXPECT_LT(adjoint_low_height_bound({DynkinFamily::B, n}), adjoint_low_height_bound({DynkinFamily::B, n + 1}));
    if (n >= 3) EXPECT_LT(adjoint_low_height_bound({DynkinFamily::D, n}), adjoint_low_height_bound({DynkinFamily::D, n + 1}));
  }
}

TEST(ParseDynkin, Errors) {
  EXPECT_EQ(code_of([] { parse_dynkin("X3"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_dynkin("A"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_dynkin("A-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_dynkin("A0"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { parse_dynkin("B1"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { parse_dynkin("D2"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { parse_dynkin("E9"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { parse_dynkin("G3"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(to_string(parse_dynkin("E7")), "E7");
  EXPECT_EQ(to_string(parse_dynkin("C12")), "C12");
}

std::string curve(std::initializer_list<const char*> names) {
  std::set<DynkinType> s;
  for (const char* n : names) s.insert(parse_dynkin(n));
  return to_string(heinloth_curve_condition(s));
}

TEST(CurveCondition, Table) {
  EXPECT_EQ(curve({"A3"}), "any characteristic");
  EXPECT_EQ(curve({"B2"}), "char != 2");
  EXPECT_EQ(curve({"C4"}), "char != 2");
  EXPECT_EQ(curve({"D5"}), "char != 2");
  EXPECT_EQ(curve({"G2"}), "char > 10");
  EXPECT_EQ(curve({"F4"}), "char > 22");
  EXPECT_EQ(curve({"E6"}), "char > 22");
  EXPECT_EQ(curve({"E7"}), "char > 34");
  EXPECT_EQ(curve({"E8"}), "char > 58");
}

TEST(CurveCondition, ProductTakesTheStrongestClause) {
  EXPECT_EQ(curve({"A1", "B3"}), "char != 2");
  EXPECT_EQ(curve({"A1", "G2", "D4"}), "char > 10");
  EXPECT_EQ(curve({"E6", "E8", "A2"}), "char > 58");
  EXPECT_EQ(curve({"F4", "E7"}), "char > 34");
  EXPECT_EQ(code_of([] { heinloth_curve_condition({}); }), ErrorCode::OutOfRange);
}

TEST(GoodPrimes, ExceptionalTypes) {
  EXPECT_EQ(good_prime_excluded(parse_dynkin("E8")), (std::set<int>{2, 3, 5}));
  for (const char* t : {"G2", "F4", "E6", "E7"}) EXPECT_EQ(good_prime_excluded(parse_dynkin(t)), (std::set<int>{2, 3})) << t;
  EXPECT_EQ(code_of([] { good_prime_excluded(parse_dynkin("A4")); }), ErrorCode::NotExceptional);
}

TEST(SeparableIndex, Examples) {
  EXPECT_EQ(separable_index_upper_bound(1, 2), 2);
  EXPECT_EQ(separable_index_upper_bound(2, 3), 18);
  EXPECT_EQ(separable_index_upper_bound(1, 1), 1);
  EXPECT_EQ(code_of([] { separable_index_upper_bound(0, 1); }), ErrorCode::OutOfRange);
}

}  // namespace
}  // namespace gitss
