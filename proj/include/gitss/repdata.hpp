#pragma once

// Characteristic bounds tabulated by Dynkin type: the low-height condition
// for the adjoint representation, the curve-case semistable-reduction
// clauses, the separable-index estimate and the excluded (bad) primes of
// the exceptional types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"

namespace gitss {

enum class DynkinFamily { A, B, C, D, E6, E7, E8, F4, G2 };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

inline bool is_exceptional(DynkinFamily f) {
  return f == DynkinFamily::E6 || f == DynkinFamily::E7 || f == DynkinFamily::E8 || f == DynkinFamily::F4 ||
         f == DynkinFamily::G2;
}

inline int fixed_rank(DynkinFamily f) {
  switch (f) {
    case DynkinFamily::E6: return 6;
    case DynkinFamily::E7: return 7;
    case DynkinFamily::E8: return 8;
    case DynkinFamily::F4: return 4;
    case DynkinFamily::G2: return 2;
    default: return 0;
  }
}

inline void validate(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: require(t.rank >= 1, ErrorCode::InvalidRank, "A_n needs n ≥ 1"); break;
    case DynkinFamily::B: require(t.rank >= 2, ErrorCode::InvalidRank, "B_n needs n ≥ 2"); break;
    case DynkinFamily::C: require(t.rank >= 2, ErrorCode::InvalidRank, "C_n needs n ≥ 2"); break;
    case DynkinFamily::D: require(t.rank >= 3, ErrorCode::InvalidRank, "D_n needs n ≥ 3"); break;
    default:
      require(t.rank == fixed_rank(t.family), ErrorCode::InvalidRank, "exceptional type has a fixed rank");
  }
}

/// "A5", "D4", "E8", "G2", ...
inline DynkinType parse_dynkin(std::string_view text) {
  require(text.size() >= 2, ErrorCode::ParseError, "bad Dynkin type '" + std::string(text) + "'");
  std::string_view digits = text.substr(1);
  require(std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
              digits.size() <= 4,
          ErrorCode::ParseError, "bad Dynkin rank in '" + std::string(text) + "'");
  const int n = std::stoi(std::string(digits));
  DynkinType t{DynkinFamily::A, n};
  switch (text[0]) {
    case 'A': t.family = DynkinFamily::A; break;
    case 'B': t.family = DynkinFamily::B; break;
    case 'C': t.family = DynkinFamily::C; break;
    case 'D': t.family = DynkinFamily::D; break;
    case 'E':
      require(n >= 6 && n <= 8, ErrorCode::InvalidRank, "E_n needs n in 6..8");
      t.family = n == 6 ? DynkinFamily::E6 : n == 7 ? DynkinFamily::E7 : DynkinFamily::E8;
      break;
    case 'F':
      require(n == 4, ErrorCode::InvalidRank, "only F4 exists");
      t.family = DynkinFamily::F4;
      break;
    case 'G':
      require(n == 2, ErrorCode::InvalidRank, "only G2 exists");
      t.family = DynkinFamily::G2;
      break;
    default: fail(ErrorCode::ParseError, "unknown Dynkin family in '" + std::string(text) + "'");
  }
  validate(t);
  return t;
}

inline std::string to_string(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return "A" + std::to_string(t.rank);
    case DynkinFamily::B: return "B" + std::to_string(t.rank);
    case DynkinFamily::C: return "C" + std::to_string(t.rank);
    case DynkinFamily::D: return "D" + std::to_string(t.rank);
    case DynkinFamily::E6: return "E6";
    case DynkinFamily::E7: return "E7";
    case DynkinFamily::E8: return "E8";
    case DynkinFamily::F4: return "F4";
    case DynkinFamily::G2: return "G2";
  }
  return "?";
}

/// N such that the adjoint representation is of low height once Char(k) > N.
inline std::int64_t adjoint_low_height_bound(const DynkinType& t) {
  validate(t);
  const std::int64_t n = t.rank;
  switch (t.family) {
    case DynkinFamily::A: return 2 * n;
    case DynkinFamily::B:
    case DynkinFamily::C: return 4 * n - 2;
    case DynkinFamily::D: return 4 * n - 6;
    case DynkinFamily::G2: return 10;
    case DynkinFamily::F4:
    case DynkinFamily::E6: return 22;
    case DynkinFamily::E7: return 34;
    case DynkinFamily::E8: return 58;
  }
  return 0;
}

struct CurveCondition {
  enum class Kind { AnyChar, CharNot, CharGreater } kind = Kind::AnyChar;
  std::int64_t value = 0;

  friend bool operator==(const CurveCondition&, const CurveCondition&) = default;
};

inline std::string to_string(const CurveCondition& c) {
  switch (c.kind) {
    case CurveCondition::Kind::AnyChar: return "any characteristic";
    case CurveCondition::Kind::CharNot: return "char != " + std::to_string(c.value);
    case CurveCondition::Kind::CharGreater: return "char > " + std::to_string(c.value);
  }
  return "?";
}

/// Strength order: any < char ≠ 2 < char > 10 < char > 22 < char > 34 < char > 58.
inline int strength(const CurveCondition& c) {
  switch (c.kind) {
    case CurveCondition::Kind::AnyChar: return 0;
    case CurveCondition::Kind::CharNot: return 1;
    case CurveCondition::Kind::CharGreater: return static_cast<int>(c.value);
  }
  return 0;
}

/// Weakest clause of the curve-case list that covers every given factor.
inline CurveCondition heinloth_curve_condition(const std::set<DynkinType>& types) {
  require(!types.empty(), ErrorCode::OutOfRange, "need at least one simple factor");
  using K = CurveCondition::Kind;
  CurveCondition worst{K::AnyChar, 0};
  for (const auto& t : types) {
    validate(t);
    CurveCondition c;
    switch (t.family) {
      case DynkinFamily::A: c = {K::AnyChar, 0}; break;
      case DynkinFamily::B:
      case DynkinFamily::C:
      case DynkinFamily::D: c = {K::CharNot, 2}; break;
      case DynkinFamily::G2: c = {K::CharGreater, 10}; break;
      case DynkinFamily::F4:
      case DynkinFamily::E6: c = {K::CharGreater, 22}; break;
      case DynkinFamily::E7: c = {K::CharGreater, 34}; break;
      case DynkinFamily::E8: c = {K::CharGreater, 58}; break;
    }
    if (strength(c) > strength(worst)) worst = c;
  }
  return worst;
}

/// rank! · height^rank.
inline Integer separable_index_upper_bound(std::int64_t group_rank, std::int64_t height) {
  require(group_rank >= 1 && height >= 1, ErrorCode::OutOfRange, "rank and height must be positive");
  return factorial(static_cast<unsigned>(group_rank)) * boost::multiprecision::pow(Integer(height), static_cast<unsigned>(group_rank));
}

/// Primes that are not good for an exceptional type.
inline std::set<int> good_prime_excluded(const DynkinType& t) {
  validate(t);
  require(is_exceptional(t.family), ErrorCode::NotExceptional, to_string(t) + " is not exceptional");
  if (t.family == DynkinFamily::E8) return {2, 3, 5};
  return {2, 3};
}

}  // namespace gitss
