#pragma once

// Singular principal Sp/SO bundles made concrete: a split sheaf
// A = ⊕ O(d_k) on the projective line together with a (skew-)symmetric form
// φ: A ⊗ A → O given by polynomial entries in the affine coordinate x.
// Subsheaves are presented by polynomial generator matrices; their degrees
// are those of the saturations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gitss/dispo.hpp"
#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/linalg.hpp"

namespace gitss {

using PolyMatrix = Matrix<UniPoly>;

/// A = ⊕ O(d_k) with Σ d_k = 0.
struct SplitSheafModel {
  std::vector<std::int64_t> degrees;

  std::size_t rank() const { return degrees.size(); }
  std::int64_t total_degree() const { return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0}); }

  /// P(n) = d + r(n + 1) on a genus-0 curve.
  UniPoly hilbert() const {
    const auto r = static_cast<std::int64_t>(rank());
    return UniPoly{Rational(total_degree() + r), Rational(r)};
  }

  friend bool operator==(const SplitSheafModel&, const SplitSheafModel&) = default;
};

inline void validate(const SplitSheafModel& model) {
  require(model.rank() >= 1, ErrorCode::MalformedForm, "model has rank zero");
  require(model.total_degree() == 0, ErrorCode::MalformedForm, "summand degrees must sum to zero");
}

inline SplitSheafModel dual_model(const SplitSheafModel& model) {
  SplitSheafModel dual = model;
  for (auto& d : dual.degrees) d = -d;
  return dual;
}

enum class Symmetry { Symmetric, Antisymmetric };

struct FormBundle {
  SplitSheafModel model;
  Symmetry symmetry = Symmetry::Antisymmetric;
  PolyMatrix entries;
};

inline void validate(const FormBundle& fb) {
  validate(fb.model);
  const std::size_t r = fb.model.rank();
  require(fb.entries.rows() == r && fb.entries.cols() == r, ErrorCode::MalformedForm, "form matrix must be r×r");
  const Rational sigma = fb.symmetry == Symmetry::Symmetric ? 1 : -1;
  bool nonzero = false;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      const UniPoly& e = fb.entries(k, l);
      require(e == fb.entries(l, k) * sigma, ErrorCode::MalformedForm, "form does not have the declared symmetry");
      const std::int64_t bound = -(fb.model.degrees[k] + fb.model.degrees[l]);
      require(e.is_zero() || e.degree() <= bound, ErrorCode::MalformedForm,
              "entry (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ") exceeds degree " +
                  std::to_string(bound));
      nonzero = nonzero || !e.is_zero();
    }
  require(nonzero, ErrorCode::MalformedForm, "form is identically zero");
}

struct FlagStep {
  PolyMatrix generators;
  std::size_t rank = 0;
  std::int64_t degree = 0;
  Rational alpha;
};

struct SubsheafFlag {
  std::vector<FlagStep> steps;
};

namespace detail {

inline Matrix<RatFunc> to_ratfunc(const PolyMatrix& m) {
  Matrix<RatFunc> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
  return out;
}

inline UniPoly polynomial_of(const RatFunc& f) {
  require(f.den() == UniPoly::constant(1), ErrorCode::MalformedFlag, "expected a polynomial");
  return f.num();
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

struct SaturationData {
  std::size_t rank = 0;
  std::int64_t degree = 0;
};

/// Generic rank of the column span and the degree of its saturation: with
/// the maximal minors p_S of a column basis divided by their gcd,
/// deg = min_S (Σ_{k∈S} d_k − deg p_S) over nonzero p_S.
inline SaturationData saturation_of(const SplitSheafModel& model, const PolyMatrix& generators) {
  require(generators.rows() == model.rank(), ErrorCode::MalformedFlag, "generator matrix must have r rows");
  auto basis_cols = independent_columns(detail::to_ratfunc(generators));
  const std::size_t m = basis_cols.size();
  if (m == 0) return {};
  const PolyMatrix basis = generators.columns(basis_cols);

  std::vector<std::pair<std::int64_t, UniPoly>> minors;
  UniPoly g;
  detail::for_each_subset(model.rank(), m, [&](const std::vector<std::size_t>& rows) {
    Matrix<RatFunc> sub(m, m);
    std::int64_t ds = 0;
    for (std::size_t i = 0; i < m; ++i) {
      ds += model.degrees[rows[i]];
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = RatFunc(basis(rows[i], j));
    }
    UniPoly p = detail::polynomial_of(determinant(sub));
    if (p.is_zero()) return;
    g = gcd(g, p);
    minors.emplace_back(ds, std::move(p));
  });
  std::int64_t degree = 0;
  bool first = true;
  for (const auto& [ds, p] : minors) {
    std::int64_t cand = ds - divmod(p, g).first.degree();
    if (first || cand < degree) degree = cand;
    first = false;
  }
  return {m, degree};
}

/// Builds a flag from nested generator matrices, deriving ranks and degrees.
inline SubsheafFlag make_flag(const SplitSheafModel& model, const std::vector<PolyMatrix>& generators,
                              const std::vector<Rational>& alphas) {
  require(generators.size() == alphas.size(), ErrorCode::MalformedFlag, "one alpha per step required");
  const std::size_t r = model.rank();
  SubsheafFlag flag;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require(alphas[j] > 0, ErrorCode::MalformedFlag, "alphas must be positive");
    auto sat = saturation_of(model, generators[j]);
    require(sat.rank > 0 && sat.rank < r, ErrorCode::DegenerateFlag, "step rank must lie strictly between 0 and r");
    if (j > 0) {
      const auto& prev = flag.steps.back();
      require(sat.rank > prev.rank, ErrorCode::DegenerateFlag, "generic ranks must increase strictly");
      PolyMatrix both(r, prev.generators.cols() + generators[j].cols());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < prev.generators.cols(); ++c) both(i, c) = prev.generators(i, c);
        for (std::size_t c = 0; c < generators[j].cols(); ++c) both(i, prev.generators.cols() + c) = generators[j](i, c);
      }
      require(rank_of(detail::to_ratfunc(both)) == sat.rank, ErrorCode::MalformedFlag, "steps are not nested");
    }
    flag.steps.push_back({generators[j], sat.rank, sat.degree, alphas[j]});
  }
  return flag;
}

/// Flag whose j-th step is spanned by the summands listed in subsets[j]
/// (0-based summand indices).
inline SubsheafFlag coordinate_flag(const SplitSheafModel& model, const std::vector<std::vector<std::size_t>>& subsets,
                                    const std::vector<Rational>& alphas) {
  std::vector<PolyMatrix> gens;
  for (const auto& s : subsets) {
    PolyMatrix g(model.rank(), s.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
      require(s[c] < model.rank(), ErrorCode::MalformedFlag, "summand index out of range");
      g(s[c], c) = UniPoly::constant(1);
    }
    gens.push_back(std::move(g));
  }
  return make_flag(model, gens, alphas);
}

inline FiltrationData filtration_data_of(const SplitSheafModel& model, const SubsheafFlag& flag) {
  FiltrationData f;
  f.total_rank = model.rank();
  f.total_degree = model.total_degree();
  f.total_hilb = model.hilbert();
  for (const auto& step : flag.steps) {
    require(step.generators.rows() == model.rank(), ErrorCode::MalformedFlag, "flag does not fit the model");
    const auto m = static_cast<std::int64_t>(step.rank);
    f.members.push_back({step.rank, Rational(step.degree), UniPoly{Rational(step.degree + m), Rational(m)}, step.alpha});
  }
  validate(f);
  return f;
}

inline FiltrationData filtration_data_of(const FormBundle& fb, const SubsheafFlag& flag) {
  return filtration_data_of(fb.model, flag);
}

/// Pairs (i ≤ j) over blocks 1..t+1 with φ(A_i, A_j) not identically zero.
inline NonvanishingProfile form_profile(const FormBundle& fb, const SubsheafFlag& flag) {
  const std::size_t r = fb.model.rank();
  const std::size_t t = flag.steps.size();
  for (std::size_t j = 0; j < t; ++j)
    require(flag.steps[j].rank > 0 && flag.steps[j].rank < r && (j == 0 || flag.steps[j].rank > flag.steps[j - 1].rank),
            ErrorCode::DegenerateFlag, "generic ranks collapse");
  std::vector<PolyMatrix> blocks;
  for (const auto& s : flag.steps) blocks.push_back(s.generators);
  PolyMatrix full(r, r);
  for (std::size_t i = 0; i < r; ++i) full(i, i) = UniPoly::constant(1);
  blocks.push_back(std::move(full));

  std::vector<IndexTuple> tuples;
  for (std::size_t i = 0; i <= t; ++i) {
    PolyMatrix left = blocks[i].transposed() * fb.entries;
    for (std::size_t j = i; j <= t; ++j)
      if (!(left * blocks[j]).is_zero())
        tuples.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1)});
  }
  return NonvanishingProfile(static_cast<int>(t), 2, tuples);
}

/// The kernel B = ker(φ) as a one-step flag with α = 1, or nothing when φ is
/// generically nondegenerate.
inline std::optional<SubsheafFlag> kernel_destabilizer(const FormBundle& fb) {
  auto phi = detail::to_ratfunc(fb.entries);
  if (!determinant(phi).is_zero()) return std::nullopt;
  Matrix<RatFunc> ker = kernel_basis(phi);
  // Clear denominators column by column.
  PolyMatrix gens(ker.rows(), ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    UniPoly common = UniPoly::constant(1);
    for (std::size_t i = 0; i < ker.rows(); ++i) common = divmod(common * ker(i, c).den(), gcd(common, ker(i, c).den())).first;
    for (std::size_t i = 0; i < ker.rows(); ++i)
      gens(i, c) = divmod(ker(i, c).num() * common, ker(i, c).den()).first;
  }
  return make_flag(fb.model, {gens}, {Rational(1)});
}

inline constexpr std::size_t kMaxExhaustiveRank = 6;

/// All chains ∅ ⊊ S_1 ⊊ … ⊊ S_t ⊊ {0..r−1} with t ≥ 1.
inline std::vector<std::vector<std::vector<std::size_t>>> coordinate_chains(std::size_t r) {
  require(r <= kMaxExhaustiveRank, ErrorCode::TooLarge, "exhaustive enumeration limited to rank " + std::to_string(kMaxExhaustiveRank));
  const unsigned full = (1u << r) - 1;
  auto members = [r](unsigned mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) s.push_back(k);
    return s;
  };
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<unsigned> chain;
  auto extend = [&](auto&& self, unsigned below) -> void {
    for (unsigned mask = 1; mask < full; ++mask) {
      if ((mask & below) != below || mask == below) continue;
      chain.push_back(mask);
      std::vector<std::vector<std::size_t>> c;
      for (unsigned m : chain) c.push_back(members(m));
      out.push_back(std::move(c));
      self(self, mask);
      chain.pop_back();
    }
  };
  extend(extend, 0u);
  return out;
}

struct ExhaustiveCoordinate {};
struct SuppliedFlags {
  std::vector<SubsheafFlag> flags;
};
using FlagSource = std::variant<ExhaustiveCoordinate, SuppliedFlags>;

struct FormVerdict {
  bool satisfied = true;
  std::optional<SubsheafFlag> witness;
  std::optional<Rational> witness_mu;
};

/// Kernel flag first, then the source's flags (α = 1 on every coordinate step).
inline std::vector<SubsheafFlag> candidate_flags(const FormBundle& fb, const FlagSource& source) {
  std::vector<SubsheafFlag> flags;
  if (auto k = kernel_destabilizer(fb)) flags.push_back(std::move(*k));
  if (const auto* supplied = std::get_if<SuppliedFlags>(&source)) {
    flags.insert(flags.end(), supplied->flags.begin(), supplied->flags.end());
  } else {
    for (const auto& chain : coordinate_chains(fb.model.rank()))
      flags.push_back(coordinate_flag(fb.model, chain, std::vector<Rational>(chain.size(), Rational(1))));
  }
  return flags;
}

/// μ ≥ 0 on every candidate flag and M (⪰) 0 wherever μ = 0.
inline FormVerdict semistable_form(const FormBundle& fb, const FlagSource& source, bool strict) {
  validate(fb);
  const auto flags = candidate_flags(fb, source);
  std::vector<DispoInstance> model;
  for (const auto& flag : flags) model.push_back({filtration_data_of(fb, flag), form_profile(fb, flag)});
  auto v = asymptotic_semistable(model, strict);
  if (v.satisfied) return {};
  return {false, flags[*v.witness], mu_profile(model[*v.witness].filtration, model[*v.witness].profile)};
}

/// L (≥) 0 on every candidate flag with μ = 0, i.e. on those coming from
/// reductions of the structure group.
inline FormVerdict ramanathan_semistable(const FormBundle& fb, const FlagSource& source, bool strict) {
  validate(fb);
  for (const auto& flag : candidate_flags(fb, source)) {
    auto f = filtration_data_of(fb, flag);
    Rational m = mu_profile(f, form_profile(fb, flag));
    if (m != 0) continue;
    Rational l = functional_L(f);
    if (strict ? l <= 0 : l < 0) return {false, flag, m};
  }
  return {};
}

/// Summand sets of each step when every generator column is a nonzero
/// constant multiple of a standard basis vector.
inline std::optional<std::vector<std::vector<std::size_t>>> coordinate_sets(const SubsheafFlag& flag) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& step : flag.steps) {
    std::vector<std::size_t> rows;
    const auto& g = step.generators;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, c).is_zero()) continue;
        if (hit || g(i, c).degree() != 0) return std::nullopt;
        hit = i;
      }
      if (!hit) return std::nullopt;
      rows.push_back(*hit);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    out.push_back(std::move(rows));
  }
  return out;
}

/// Annihilator flag in the dual A^∨ = ⊕ O(−d_k): step i is spanned by the
/// summands missing from step t+1−i, with α reversed. The result lives on
/// dual_model(model).
inline SubsheafFlag dualize_filtration(const SplitSheafModel& model, const SubsheafFlag& flag) {
  auto sets = coordinate_sets(flag);
  require(sets.has_value(), ErrorCode::NotCoordinateFlag, "dualization needs a coordinate flag");
  const std::size_t t = sets->size();
  std::vector<std::vector<std::size_t>> dual_sets;
  std::vector<Rational> alphas;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& s = (*sets)[t - 1 - i];
    std::vector<std::size_t> complement;
    for (std::size_t k = 0; k < model.rank(); ++k)
      if (!std::binary_search(s.begin(), s.end(), k)) complement.push_back(k);
    dual_sets.push_back(std::move(complement));
    alphas.push_back(flag.steps[t - 1 - i].alpha);
  }
  return coordinate_flag(dual_model(model), dual_sets, alphas);
}

}  // namespace gitss
