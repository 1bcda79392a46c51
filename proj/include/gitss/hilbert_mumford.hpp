#pragma once

// Hilbert–Mumford weights on representations presented by their torus
// weight decomposition, torus-level instability with exact certificates,
// and the dimension combinatorics of divided powers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/flags.hpp"
#include "gitss/fourier_motzkin.hpp"

namespace gitss {

struct WeightedBasisVector {
  std::string label;
  std::vector<std::int64_t> weight;
};

/// A representation of the rank-r diagonal torus, one weight per basis vector.
class TorusWeightRep {
 public:
  TorusWeightRep(std::size_t torus_rank, std::vector<WeightedBasisVector> basis)
      : torus_rank_(torus_rank), basis_(std::move(basis)) {
    require(!basis_.empty(), ErrorCode::DimensionMismatch, "representation basis is empty");
    std::set<std::string> labels;
    for (const auto& b : basis_) {
      require(b.weight.size() == torus_rank_, ErrorCode::DimensionMismatch,
              "weight of '" + b.label + "' has wrong length");
      require(labels.insert(b.label).second, ErrorCode::DimensionMismatch, "duplicate label '" + b.label + "'");
    }
  }

  std::size_t torus_rank() const { return torus_rank_; }
  const std::vector<WeightedBasisVector>& basis() const { return basis_; }

  const std::vector<std::int64_t>& weight_of(const std::string& label) const {
    for (const auto& b : basis_)
      if (b.label == label) return b.weight;
    fail(ErrorCode::DimensionMismatch, "unknown basis label '" + label + "'");
  }

 private:
  std::size_t torus_rank_;
  std::vector<WeightedBasisVector> basis_;
};

/// Coordinates of a point; only nonzero coordinates are stored.
class RepPoint {
 public:
  RepPoint() = default;
  explicit RepPoint(const std::map<std::string, Rational>& coords) {
    for (const auto& [label, value] : coords)
      if (value != 0) coords_.emplace(label, value);
    require(!coords_.empty(), ErrorCode::DimensionMismatch, "point has empty support");
  }

  const std::map<std::string, Rational>& coords() const { return coords_; }

  std::vector<std::string> support() const {
    std::vector<std::string> s;
    for (const auto& kv : coords_) s.push_back(kv.first);
    return s;
  }

 private:
  std::map<std::string, Rational> coords_;
};

inline std::int64_t pairing(const OneParamSubgroup& lambda, const std::vector<std::int64_t>& weight) {
  std::int64_t s = 0;
  for (std::size_t a = 0; a < weight.size(); ++a) s += lambda[a] * weight[a];
  return s;
}

/// μ(λ, w): the largest λ-weight among the components on which w is nonzero.
inline std::int64_t mu(const TorusWeightRep& rep, const OneParamSubgroup& lambda, const RepPoint& point) {
  require(lambda.rank() == rep.torus_rank(), ErrorCode::DimensionMismatch, "subgroup rank differs from torus rank");
  require(!lambda.is_trivial(), ErrorCode::TrivialSubgroup, "μ needs a nontrivial one-parameter subgroup");
  require(!point.coords().empty(), ErrorCode::DimensionMismatch, "point has empty support");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [label, value] : point.coords()) best = std::max(best, pairing(lambda, rep.weight_of(label)));
  return best;
}

/// μ only depends on the weighted flag: whenever the two flags coincide the
/// two values must agree. Returns whether that holds on this instance.
inline bool mu_flag_invariance_check(const TorusWeightRep& rep, const OneParamSubgroup& lambda1,
                                     const OneParamSubgroup& lambda2, const RepPoint& point) {
  auto f1 = weighted_flag_of(lambda1), f2 = weighted_flag_of(lambda2);
  if (f1.dims != f2.dims || f1.alphas != f2.alphas) return true;
  // Same dims and alphas; the flags are equal only if every step is spanned
  // by the same basis vectors.
  for (std::size_t d : f1.dims) {
    std::set<std::size_t> s1(f1.basis_order.begin(), f1.basis_order.begin() + static_cast<std::ptrdiff_t>(d));
    std::set<std::size_t> s2(f2.basis_order.begin(), f2.basis_order.begin() + static_cast<std::ptrdiff_t>(d));
    if (s1 != s2) return true;
  }
  return mu(rep, lambda1, point) == mu(rep, lambda2, point);
}

/// Convex coefficients c_b on the support with Σ c_b·weight(b) = shift·(1,…,1):
/// zero lies in the hull of the support weights modulo the diagonal.
struct HullCertificate {
  std::map<std::string, Rational> coefficients;
  Rational shift;
};

struct TorusVerdict {
  std::optional<OneParamSubgroup> destabilizer;
  std::optional<HullCertificate> certificate;

  bool unstable() const { return destabilizer.has_value(); }
};

inline constexpr std::size_t kMaxTorusRank = 8;
inline constexpr std::int64_t kGridRadius = 3;

inline bool verify_certificate(const TorusWeightRep& rep, const RepPoint& point, const HullCertificate& cert) {
  const auto& coords = point.coords();
  Rational total = 0;
  std::vector<Rational> combo(rep.torus_rank(), Rational(0));
  for (const auto& [label, c] : cert.coefficients) {
    if (c < 0 || !coords.count(label)) return false;
    total += c;
    const auto& w = rep.weight_of(label);
    for (std::size_t a = 0; a < w.size(); ++a) combo[a] += c * w[a];
  }
  if (total != 1) return false;
  return std::all_of(combo.begin(), combo.end(), [&](const Rational& x) { return x == cert.shift; });
}

namespace detail {

// Lexicographically least sum-zero λ in {−R..R}^r minimising μ, if μ < 0
// is reachable there.
inline std::optional<OneParamSubgroup> best_grid_destabilizer(
    std::size_t r, const std::vector<const std::vector<std::int64_t>*>& weights) {
  std::vector<std::int64_t> lambda(r, -kGridRadius), best;
  std::int64_t best_mu = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto x : lambda) sum += x;
    if (sum == 0) {
      std::int64_t m = std::numeric_limits<std::int64_t>::min();
      for (const auto* w : weights) {
        std::int64_t p = 0;
        for (std::size_t a = 0; a < r; ++a) p += lambda[a] * (*w)[a];
        m = std::max(m, p);
      }
      if (m < best_mu) {
        best_mu = m;
        best = lambda;
      }
    }
    std::size_t pos = r;
    while (pos > 0 && lambda[pos - 1] == kGridRadius) lambda[--pos] = -kGridRadius;
    if (pos == 0) break;
    ++lambda[pos - 1];
  }
  if (best.empty()) return std::nullopt;
  return primitive(OneParamSubgroup(best));
}

}  // namespace detail

/// Decides whether some sum-zero λ makes every support weight pair negatively.
/// Unstable verdicts carry a primitive integral destabilizer (the
/// lexicographically least μ-minimiser on the {−3..3}^r grid when one exists
/// there, otherwise the elimination solution); semistable verdicts carry a
/// convex-combination certificate.
inline TorusVerdict torus_destabilize(const TorusWeightRep& rep, const RepPoint& point) {
  const std::size_t r = rep.torus_rank();
  require(r >= 1, ErrorCode::DimensionMismatch, "torus rank must be positive");
  require(r <= kMaxTorusRank, ErrorCode::TooLarge, "torus rank above " + std::to_string(kMaxTorusRank));
  const auto labels = point.support();
  require(!labels.empty(), ErrorCode::DimensionMismatch, "point has empty support");

  // Substitute λ_r = −Σ_{a<r} λ_a; each support weight asks for ⟨λ, w⟩ ≤ −1.
  std::vector<const std::vector<std::int64_t>*> weights;
  std::vector<fm::Inequality> system;
  for (const auto& label : labels) {
    const auto& w = rep.weight_of(label);
    weights.push_back(&w);
    fm::Inequality ineq{std::vector<Rational>(r - 1), Rational(-1)};
    for (std::size_t a = 0; a + 1 < r; ++a) ineq.coeffs[a] = Rational(w[a] - w[r - 1]);
    system.push_back(std::move(ineq));
  }
  auto solved = fm::solve(system, r - 1);

  TorusVerdict verdict;
  if (solved.farkas) {
    const auto& y = *solved.farkas;
    Rational total = 0;
    for (const auto& v : y) total += v;
    HullCertificate cert;
    cert.shift = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (y[i] == 0) continue;
      Rational c = y[i] / total;
      cert.coefficients.emplace(labels[i], c);
      cert.shift += c * (*weights[i])[r - 1];
    }
    verdict.certificate = std::move(cert);
    return verdict;
  }

  if (auto grid = detail::best_grid_destabilizer(r, weights)) {
    verdict.destabilizer = *grid;
    return verdict;
  }
  const auto& x = *solved.point;
  Integer lcm = 1;
  for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator_of(v));
  std::vector<std::int64_t> lambda(r);
  std::int64_t last = 0;
  for (std::size_t a = 0; a + 1 < r; ++a) {
    Integer scaled = numerator_of(x[a]) * (lcm / denominator_of(x[a]));
    lambda[a] = scaled.convert_to<std::int64_t>();
    last -= lambda[a];
  }
  lambda[r - 1] = last;
  verdict.destabilizer = primitive(OneParamSubgroup(std::move(lambda)));
  return verdict;
}

/// dim D^u(k^r) = binom(r+u−1, u).
inline Integer divided_power_dim(std::int64_t r, std::int64_t u) {
  require(r >= 1, ErrorCode::OutOfRange, "rank must be positive");
  require(u >= 0, ErrorCode::OutOfRange, "degree must be nonnegative");
  return binomial(r + u - 1, u);
}

/// Σ over compositions (u_1,…,u_v) of u of Π dim D^{u_i}(k^r).
inline Integer dd_module_dim(std::int64_t r, std::int64_t u, std::int64_t v) {
  require(v >= 1, ErrorCode::OutOfRange, "number of tensor factors must be positive");
  require(u >= 0, ErrorCode::OutOfRange, "degree must be nonnegative");
  std::vector<Integer> single(static_cast<std::size_t>(u + 1));
  for (std::int64_t k = 0; k <= u; ++k) single[static_cast<std::size_t>(k)] = divided_power_dim(r, k);
  // Truncated power of the generating series Σ_k dim D^k · z^k.
  std::vector<Integer> acc(static_cast<std::size_t>(u + 1), Integer(0));
  acc[0] = 1;
  for (std::int64_t f = 0; f < v; ++f) {
    std::vector<Integer> next(acc.size(), Integer(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; i + j < acc.size(); ++j) next[i + j] += acc[i] * single[j];
    acc = std::move(next);
  }
  return acc.back();
}

inline constexpr int kMaxCompositionOrder = 4;

/// All (d_1,…,d_s) with d_i ≥ 0 and Σ i·d_i = s!, ordered colexicographically
/// (by d_s, then d_{s−1}, …).
inline std::vector<std::vector<std::int64_t>> weighted_compositions(int s) {
  require(s >= 1, ErrorCode::OutOfRange, "order must be positive");
  require(s <= kMaxCompositionOrder, ErrorCode::TooLarge, "order above " + std::to_string(kMaxCompositionOrder));
  const std::int64_t total = factorial(static_cast<unsigned>(s)).convert_to<std::int64_t>();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> d(static_cast<std::size_t>(s), 0);
  // Fix d_s, d_{s−1}, …, d_2 in ascending order; d_1 takes the remainder.
  auto recurse = [&](auto&& self, int i, std::int64_t remaining) -> void {
    if (i == 1) {
      d[0] = remaining;
      out.push_back(d);
      return;
    }
    for (std::int64_t k = 0; k * i <= remaining; ++k) {
      d[static_cast<std::size_t>(i - 1)] = k;
      self(self, i - 1, remaining - k * i);
    }
    d[static_cast<std::size_t>(i - 1)] = 0;
  };
  recurse(recurse, s, total);
  return out;
}

}  // namespace gitss
