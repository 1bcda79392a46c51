#pragma once

// Exact feasibility of A x ≤ b by Fourier–Motzkin elimination. Every derived
// row remembers the nonnegative combination of input rows that produced it,
// so an infeasible system comes back with a Farkas certificate
// y ≥ 0, yᵀA = 0, yᵀb < 0.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"

namespace gitss::fm {

struct Inequality {
  std::vector<Rational> coeffs;
  Rational bound;
};

struct Result {
  /// Set when feasible.
  std::optional<std::vector<Rational>> point;
  /// Set when infeasible; one multiplier per input row.
  std::optional<std::vector<Rational>> farkas;
};

inline constexpr std::size_t kMaxRows = 200000;

namespace detail {

struct Row {
  std::vector<Rational> a;
  Rational b;
  std::vector<Rational> y;
};

inline void scale_down(Row& row) {
  Rational s = 0;
  for (const auto& c : row.a)
    if (c != 0) {
      s = c < 0 ? Rational(-c) : c;
      break;
    }
  if (s == 0 || s == 1) return;
  for (auto& c : row.a) c /= s;
  row.b /= s;
  for (auto& c : row.y) c /= s;
}

inline bool all_zero(const std::vector<Rational>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// Picks a value in [lo, hi] (either side may be open-ended), preferring
// small integers.
inline Rational choose_in(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  auto ceil_of = [](const Rational& q) {
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer f = n / d;
    if (f * d < n) f += 1;
    return Rational(f);
  };
  auto floor_of = [](const Rational& q) {
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer f = n / d;
    if (f * d > n) f -= 1;
    return Rational(f);
  };
  if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
  if (lo && !hi) return ceil_of(*lo);
  if (hi && !lo) return floor_of(*hi);
  if (*lo > 0) {
    Rational c = ceil_of(*lo);
    return c <= *hi ? c : (*lo + *hi) / 2;
  }
  Rational f = floor_of(*hi);
  return f >= *lo ? f : (*lo + *hi) / 2;
}

}  // namespace detail

/// Decides A x ≤ b for n unknowns.
inline Result solve(const std::vector<Inequality>& system, std::size_t n) {
  using detail::Row;
  const std::size_t m = system.size();
  std::vector<Row> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    require(system[i].coeffs.size() == n, ErrorCode::DimensionMismatch, "inequality width");
    Row row{system[i].coeffs, system[i].bound, std::vector<Rational>(m, Rational(0))};
    row.y[i] = 1;
    rows.push_back(std::move(row));
  }

  // stages[k] holds the rows in which variables 0..k-1 are already eliminated.
  std::vector<std::vector<Row>> stages;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Row> kept;
    std::map<std::vector<Rational>, std::size_t> seen;
    for (auto& row : rows) {
      detail::scale_down(row);
      if (detail::all_zero(row.a)) {
        if (row.b < 0) return {std::nullopt, row.y};
        continue;
      }
      std::vector<Rational> key = row.a;
      key.push_back(row.b);
      if (seen.emplace(std::move(key), kept.size()).second) kept.push_back(std::move(row));
    }
    stages.push_back(kept);
    if (k == n) break;

    std::vector<Row> next, pos, neg;
    for (auto& row : kept) {
      if (row.a[k] > 0) pos.push_back(row);
      else if (row.a[k] < 0) neg.push_back(row);
      else next.push_back(row);
    }
    require(next.size() + pos.size() * neg.size() <= kMaxRows, ErrorCode::TooLarge,
            "Fourier-Motzkin elimination exceeded the row cap");
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rational sp = -q.a[k], sq = p.a[k];
        Row row{std::vector<Rational>(n), sp * p.b + sq * q.b, std::vector<Rational>(m)};
        for (std::size_t j = 0; j < n; ++j) row.a[j] = sp * p.a[j] + sq * q.a[j];
        row.a[k] = 0;
        for (std::size_t j = 0; j < m; ++j) row.y[j] = sp * p.y[j] + sq * q.y[j];
        next.push_back(std::move(row));
      }
    rows = std::move(next);
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& row : stages[k]) {
      if (row.a[k] == 0) continue;
      Rational rest = row.b;
      for (std::size_t j = k + 1; j < n; ++j) rest -= row.a[j] * x[j];
      Rational bound = rest / row.a[k];
      if (row.a[k] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    x[k] = detail::choose_in(lo, hi);
  }
  return {std::move(x), std::nullopt};
}

}  // namespace gitss::fm
