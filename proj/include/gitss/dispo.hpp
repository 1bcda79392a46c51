#pragma once

// Semistability calculus for dispo sheaves. A weighted filtration enters only
// through its discrete invariants (FiltrationData) and the decoration only
// through its nonvanishing profile; everything here is exact.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/flags.hpp"

namespace gitss {

struct FiltrationMember {
  std::size_t rank = 0;
  Rational degree;
  UniPoly hilb;
  Rational alpha;

  friend bool operator==(const FiltrationMember&, const FiltrationMember&) = default;
};

/// Invariants of a weighted filtration 0 ⊊ A_1 ⊊ … ⊊ A_t ⊊ A.
struct FiltrationData {
  std::size_t total_rank = 0;
  Rational total_degree;
  UniPoly total_hilb;
  std::vector<FiltrationMember> members;

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (const auto& m : members) out.push_back(m.rank);
    return out;
  }
  std::vector<Rational> alphas() const {
    std::vector<Rational> out;
    for (const auto& m : members) out.push_back(m.alpha);
    return out;
  }

  friend bool operator==(const FiltrationData&, const FiltrationData&) = default;
};

inline void validate(const FiltrationData& f) {
  require(f.total_rank >= 1, ErrorCode::MalformedFiltration, "total rank must be positive");
  validate_filtration_shape(f.ranks(), f.alphas(), f.total_rank);
  for (const auto& m : f.members)
    require(poly_order(m.hilb, f.total_hilb) == Order::Less, ErrorCode::MalformedFiltration,
            "member Hilbert polynomial must be eventually smaller than the total");
}

using IndexTuple = std::vector<int>;

/// Sorted index tuples (i_1 ≤ … ≤ i_len) over 1..t+1 on which the decoration
/// does not vanish. Upward closed and always containing (t+1,…,t+1).
class NonvanishingProfile {
 public:
  NonvanishingProfile() = default;

  /// Tuples are sorted on ingestion; throws MalformedProfile unless the
  /// resulting set is a valid profile.
  NonvanishingProfile(int steps, int tuple_len, const std::vector<IndexTuple>& tuples)
      : steps_(steps), tuple_len_(tuple_len) {
    require(steps >= 0 && tuple_len >= 0, ErrorCode::MalformedProfile, "negative profile dimensions");
    for (auto t : tuples) tuples_.insert(normalized(std::move(t)));
    require(tuples_.count(IndexTuple(static_cast<std::size_t>(tuple_len_), steps_ + 1)) == 1,
            ErrorCode::MalformedProfile, "profile must contain the all-(t+1) tuple");
    for (const auto& t : tuples_)
      for (const auto& up : successors(t))
        require(tuples_.count(up) == 1, ErrorCode::MalformedProfile, "profile is not upward closed");
  }

  /// Smallest valid profile containing the generators.
  static NonvanishingProfile upward_closure(int steps, int tuple_len, const std::vector<IndexTuple>& generators) {
    NonvanishingProfile p;
    p.steps_ = steps;
    p.tuple_len_ = tuple_len;
    std::vector<IndexTuple> stack;
    for (auto g : generators) stack.push_back(p.normalized(std::move(g)));
    stack.emplace_back(static_cast<std::size_t>(tuple_len), steps + 1);
    while (!stack.empty()) {
      IndexTuple t = std::move(stack.back());
      stack.pop_back();
      if (!p.tuples_.insert(t).second) continue;
      for (auto& up : p.successors(t)) stack.push_back(std::move(up));
    }
    return p;
  }

  int steps() const { return steps_; }
  int tuple_len() const { return tuple_len_; }
  const std::set<IndexTuple>& tuples() const { return tuples_; }

  friend bool operator==(const NonvanishingProfile&, const NonvanishingProfile&) = default;

 private:
  IndexTuple normalized(IndexTuple t) const {
    require(static_cast<int>(t.size()) == tuple_len_, ErrorCode::MalformedProfile, "tuple has wrong length");
    for (int i : t)
      require(i >= 1 && i <= steps_ + 1, ErrorCode::MalformedProfile, "tuple index outside 1..t+1");
    std::sort(t.begin(), t.end());
    return t;
  }

  // Sorted tuples obtained by raising one entry by one; every sorted u' ≥ u
  // is reachable from u through these.
  std::vector<IndexTuple> successors(const IndexTuple& t) const {
    std::vector<IndexTuple> out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] == steps_ + 1) continue;
      if (k + 1 < t.size() && t[k + 1] == t[k]) continue;
      IndexTuple u = t;
      ++u[k];
      out.push_back(std::move(u));
    }
    return out;
  }

  int steps_ = 0;
  int tuple_len_ = 0;
  std::set<IndexTuple> tuples_;
};

/// M = Σ α_j (rk A_j · P(A) − rk A · P(A_j)).
inline UniPoly functional_M(const FiltrationData& f) {
  UniPoly out;
  const auto r = static_cast<std::int64_t>(f.total_rank);
  for (const auto& m : f.members) {
    UniPoly term = f.total_hilb * Rational(static_cast<std::int64_t>(m.rank)) - m.hilb * Rational(r);
    out += term * m.alpha;
  }
  return out;
}

/// L = Σ α_j (rk A_j · deg A − rk A · deg A_j).
inline Rational functional_L(const FiltrationData& f) {
  Rational out = 0;
  const auto r = static_cast<std::int64_t>(f.total_rank);
  for (const auto& m : f.members)
    out += m.alpha * (static_cast<std::int64_t>(m.rank) * f.total_degree - r * m.degree);
  return out;
}

/// γ_1 < … < γ_{t+1}: the distinct values of the associated weight vector.
inline std::vector<Rational> block_weights(const FiltrationData& f) {
  if (f.members.empty()) return {Rational(0)};
  return distinct_weights(weight_vector_of_filtration(f.ranks(), f.alphas(), f.total_rank));
}

namespace detail {

inline void check_profile_matches(const FiltrationData& f, const NonvanishingProfile& prof) {
  require(static_cast<std::size_t>(prof.steps()) == f.members.size(), ErrorCode::ProfileMismatch,
          "profile has " + std::to_string(prof.steps()) + " steps, filtration has " +
              std::to_string(f.members.size()));
  require(!prof.tuples().empty(), ErrorCode::ProfileMismatch, "empty profile");
}

inline Rational tuple_weight(const std::vector<Rational>& gamma, const IndexTuple& t) {
  Rational s = 0;
  for (int i : t) s += gamma[static_cast<std::size_t>(i - 1)];
  return s;
}

}  // namespace detail

/// μ = −min{γ_{i_1}+⋯+γ_{i_len} : (i_1,…,i_len) in the profile}; 0 when t = 0.
inline Rational mu_profile(const FiltrationData& f, const NonvanishingProfile& prof) {
  detail::check_profile_matches(f, prof);
  if (f.members.empty()) return 0;
  const auto gamma = block_weights(f);
  std::optional<Rational> best;
  for (const auto& t : prof.tuples()) {
    Rational s = detail::tuple_weight(gamma, t);
    if (!best || s < *best) best = s;
  }
  return -*best;
}

/// Profile of the associated admissible deformation: the tuples of minimal
/// γ-sum, closed upwards.
inline NonvanishingProfile admissible_deformation(const FiltrationData& f, const NonvanishingProfile& prof) {
  detail::check_profile_matches(f, prof);
  const auto gamma = block_weights(f);
  std::optional<Rational> best;
  std::vector<IndexTuple> minimal;
  for (const auto& t : prof.tuples()) {
    Rational s = f.members.empty() ? Rational(0) : detail::tuple_weight(gamma, t);
    if (!best || s < *best) {
      best = s;
      minimal.clear();
    }
    if (s == *best) minimal.push_back(t);
  }
  return NonvanishingProfile::upward_closure(prof.steps(), prof.tuple_len(), minimal);
}

struct DispoInstance {
  FiltrationData filtration;
  NonvanishingProfile profile;
};

/// satisfied, or the index of the first filtration violating the condition.
struct Verdict {
  bool satisfied = true;
  std::optional<std::size_t> witness;
};

/// M + δ·μ ⪰ 0 (≻ 0 when strict) on every supplied filtration.
inline Verdict delta_semistable(const std::vector<DispoInstance>& model, const UniPoly& delta, bool strict) {
  require(is_positive(delta), ErrorCode::InvalidDelta, "δ must be a positive polynomial");
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& [f, prof] = model[i];
    UniPoly value = functional_M(f) + delta * mu_profile(f, prof);
    if (!eventually_nonnegative(value, strict)) return {false, i};
  }
  return {};
}

/// L + δ̄·μ ≥ 0 (> 0 when strict) on every supplied filtration.
inline Verdict slope_semistable(const std::vector<DispoInstance>& model, const Rational& delta_bar, bool strict) {
  require(delta_bar >= 0, ErrorCode::InvalidDelta, "δ̄ must be nonnegative");
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& [f, prof] = model[i];
    Rational value = functional_L(f) + delta_bar * mu_profile(f, prof);
    if (strict ? value <= 0 : value < 0) return {false, i};
  }
  return {};
}

/// δ̄ = (dim X − 1)! times the coefficient of x^{dim X − 1} in δ, where dim X
/// is the degree of the Hilbert polynomial.
inline Rational slope_parameter(const UniPoly& delta, int dim_x) {
  require(dim_x >= 1, ErrorCode::InvalidDelta, "base must have positive dimension");
  require(delta.degree() <= dim_x - 1, ErrorCode::InvalidDelta, "δ must have degree at most dim X − 1");
  return Rational(factorial(static_cast<unsigned>(dim_x - 1))) * delta.coefficient(static_cast<std::size_t>(dim_x - 1));
}

/// δ-semistable ⟹ δ̄-slope semistable on this instance. Never false for
/// geometrically consistent data.
inline bool slopy_implication_check(const std::vector<DispoInstance>& model, const UniPoly& delta) {
  if (model.empty()) return true;
  const int dim_x = model.front().filtration.total_hilb.degree();
  const Rational delta_bar = slope_parameter(delta, dim_x);
  if (!delta_semistable(model, delta, false).satisfied) return true;
  return slope_semistable(model, delta_bar, false).satisfied;
}

/// μ ≥ 0 everywhere and M ⪰ 0 (≻ 0 when strict) wherever μ = 0.
inline Verdict asymptotic_semistable(const std::vector<DispoInstance>& model, bool strict) {
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& [f, prof] = model[i];
    Rational m = mu_profile(f, prof);
    if (m < 0) return {false, i};
    if (m == 0 && !eventually_nonnegative(functional_M(f), strict)) return {false, i};
  }
  return {};
}

}  // namespace gitss
