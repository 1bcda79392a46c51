#pragma once

// One-parameter subgroups of SL_r in a fixed diagonal basis, their weighted
// flags and weight vectors, and the parabolic / unipotent-radical tests.
//
// Convention: Q(λ) is the set of g for which lim_{z→∞} λ(z) g λ(z)^{-1}
// exists. The opposite parabolic is Q(-λ); use negate().

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/linalg.hpp"

namespace gitss {

/// Integer weights γ(b) on the standard basis vectors, summing to zero.
class OneParamSubgroup {
 public:
  OneParamSubgroup() = default;
  explicit OneParamSubgroup(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
    require(!weights_.empty(), ErrorCode::InvalidSubgroup, "empty weight list");
    require(std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}) == 0,
            ErrorCode::InvalidSubgroup, "weights must sum to zero");
  }

  std::size_t rank() const { return weights_.size(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }

  bool is_trivial() const {
    return std::all_of(weights_.begin(), weights_.end(), [&](auto w) { return w == weights_.front(); });
  }

  friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

inline OneParamSubgroup negate(const OneParamSubgroup& lambda) {
  std::vector<std::int64_t> w = lambda.weights();
  for (auto& x : w) x = -x;
  return OneParamSubgroup(std::move(w));
}

/// Divides by the gcd of the entries; the trivial subgroup is returned as is.
inline OneParamSubgroup primitive(const OneParamSubgroup& lambda) {
  std::int64_t g = 0;
  for (auto w : lambda.weights()) g = std::gcd(g, w < 0 ? -w : w);
  if (g <= 1) return lambda;
  std::vector<std::int64_t> w = lambda.weights();
  for (auto& x : w) x /= g;
  return OneParamSubgroup(std::move(w));
}

/// dims: 0 < d_1 < ... < d_t < r. basis_order lists 0-based basis indices by
/// ascending weight, ties by index.
struct WeightedFlag {
  std::size_t ambient_rank = 0;
  std::vector<std::size_t> dims;
  std::vector<Rational> alphas;
  std::vector<std::size_t> basis_order;

  friend bool operator==(const WeightedFlag&, const WeightedFlag&) = default;
};

/// Nondecreasing rational entries summing to zero.
using WeightVector = std::vector<Rational>;

/// γ_r^{(i)}: i copies of i−r followed by r−i copies of i.
inline WeightVector standard_weight_vector(std::size_t r, std::size_t i) {
  require(r >= 2, ErrorCode::OutOfRange, "rank must be at least 2");
  require(i >= 1 && i < r, ErrorCode::OutOfRange,
          "index " + std::to_string(i) + " outside [1, " + std::to_string(r - 1) + "]");
  const auto ri = static_cast<std::int64_t>(r), ii = static_cast<std::int64_t>(i);
  WeightVector v(r);
  for (std::size_t a = 0; a < r; ++a) v[a] = a < i ? Rational(ii - ri) : Rational(ii);
  return v;
}

inline WeightedFlag weighted_flag_of(const OneParamSubgroup& lambda) {
  require(!lambda.is_trivial(), ErrorCode::TrivialSubgroup, "all weights equal");
  const std::size_t r = lambda.rank();
  WeightedFlag flag;
  flag.ambient_rank = r;
  flag.basis_order.resize(r);
  std::iota(flag.basis_order.begin(), flag.basis_order.end(), std::size_t{0});
  std::stable_sort(flag.basis_order.begin(), flag.basis_order.end(),
                   [&](std::size_t a, std::size_t b) { return lambda[a] < lambda[b]; });
  for (std::size_t k = 1; k < r; ++k) {
    auto lo = lambda[flag.basis_order[k - 1]], hi = lambda[flag.basis_order[k]];
    if (hi == lo) continue;
    flag.dims.push_back(k);
    flag.alphas.emplace_back(Rational(hi - lo) / static_cast<std::int64_t>(r));
  }
  return flag;
}

inline void validate_filtration_shape(const std::vector<std::size_t>& ranks,
                                      const std::vector<Rational>& alphas, std::size_t r) {
  require(ranks.size() == alphas.size(), ErrorCode::MalformedFiltration, "ranks/alphas length mismatch");
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    require(ranks[j] > 0 && ranks[j] < r, ErrorCode::MalformedFiltration, "rank outside (0, r)");
    require(j == 0 || ranks[j] > ranks[j - 1], ErrorCode::MalformedFiltration, "ranks not strictly increasing");
    require(alphas[j] > 0, ErrorCode::MalformedFiltration, "non-positive alpha");
  }
}

/// Σ_j α_j · γ_r^{(rk_j)}. An empty filtration gives the zero vector.
inline WeightVector weight_vector_of_filtration(const std::vector<std::size_t>& ranks,
                                                const std::vector<Rational>& alphas, std::size_t r) {
  validate_filtration_shape(ranks, alphas, r);
  WeightVector v(r, Rational(0));
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    auto g = standard_weight_vector(r, ranks[j]);
    for (std::size_t a = 0; a < r; ++a) v[a] += alphas[j] * g[a];
  }
  return v;
}

/// Inverse of weight_vector_of_filtration: jump positions and gaps divided by r.
inline std::pair<std::vector<std::size_t>, std::vector<Rational>> filtration_of_weight_vector(
    const WeightVector& v) {
  std::vector<std::size_t> ranks;
  std::vector<Rational> alphas;
  const auto r = static_cast<std::int64_t>(v.size());
  for (std::size_t a = 1; a < v.size(); ++a) {
    require(v[a] >= v[a - 1], ErrorCode::MalformedFiltration, "weight vector not nondecreasing");
    if (v[a] == v[a - 1]) continue;
    ranks.push_back(a);
    alphas.push_back((v[a] - v[a - 1]) / r);
  }
  return {ranks, alphas};
}

/// Distinct values γ_1 < ... < γ_{t+1} of a weight vector.
inline std::vector<Rational> distinct_weights(const WeightVector& v) {
  std::vector<Rational> out;
  for (const auto& x : v)
    if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

namespace detail {

inline void check_group_element(const OneParamSubgroup& lambda, const Matrix<Rational>& g) {
  require(g.rows() == lambda.rank() && g.cols() == lambda.rank(), ErrorCode::DimensionMismatch,
          "matrix size does not match subgroup rank");
  require(determinant(g) != 0, ErrorCode::SingularMatrix, "group element must be invertible");
}

}  // namespace detail

/// Entry (a,b) of λ(z) g λ(z)^{-1} scales as z^{γ(a)−γ(b)}.
inline bool parabolic_member(const OneParamSubgroup& lambda, const Matrix<Rational>& g) {
  detail::check_group_element(lambda, g);
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = 0; b < g.cols(); ++b)
      if (g(a, b) != 0 && lambda[a] > lambda[b]) return false;
  return true;
}

/// The limit must exist and equal the identity: equal-weight blocks of g are
/// the identity.
inline bool unipotent_radical_member(const OneParamSubgroup& lambda, const Matrix<Rational>& g) {
  if (!parabolic_member(lambda, g)) return false;
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = 0; b < g.cols(); ++b)
      if (lambda[a] == lambda[b] && g(a, b) != (a == b ? 1 : 0)) return false;
  return true;
}

}  // namespace gitss
