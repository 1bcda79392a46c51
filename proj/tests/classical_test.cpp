#include <gtest/gtest.h>

#include "gitss/classical.hpp"
#include "oracles.hpp"

namespace gitss {
namespace {

using testing::Rng;

PolyMatrix constant_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  PolyMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = UniPoly::constant(rows[i][j]);
  return m;
}

FormBundle form(std::vector<std::int64_t> degrees, Symmetry sym, PolyMatrix entries) {
  return {SplitSheafModel{std::move(degrees)}, sym, std::move(entries)};
}

FormBundle standard_symplectic() {
  return form({0, 0}, Symmetry::Antisymmetric, constant_matrix({{0, 1}, {-1, 0}}));
}

// J ⊕ 0 on O^4: a two-dimensional kernel.
FormBundle degenerate_symplectic() {
  return form({0, 0, 0, 0}, Symmetry::Antisymmetric,
              constant_matrix({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

TEST(Saturation, Examples) {
  SplitSheafModel trivial{{0, 0}};
  PolyMatrix col(2, 1);
  col(0, 0) = UniPoly::constant(1);
  col(1, 0) = UniPoly{Rational(0), Rational(1)};
  auto s = saturation_of(trivial, col);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.degree, -1);

  col(0, 0) = UniPoly{Rational(0), Rational(1)};
  s = saturation_of(trivial, col);  // x·(1,1) saturates to (1,1)
  EXPECT_EQ(s.degree, 0);

  SplitSheafModel split{{1, -1}};
  s = saturation_of(split, constant_matrix({{1}, {0}}));
  EXPECT_EQ(s.degree, 1);
  s = saturation_of(split, constant_matrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.degree, 0);
  s = saturation_of(split, constant_matrix({{1, 2}, {0, 0}}));
  EXPECT_EQ(s.rank, 1u);
}

TEST(MakeFlag, Errors) {
  SplitSheafModel m{{0, 0, 0}};
  EXPECT_EQ(code_of([&] { make_flag(m, {constant_matrix({{1}, {0}, {0}})}, {Rational(0)}); }), ErrorCode::MalformedFlag);
  EXPECT_EQ(code_of([&] { make_flag(m, {constant_matrix({{0}, {0}, {0}})}, {Rational(1)}); }), ErrorCode::DegenerateFlag);
  EXPECT_EQ(code_of([&] {
              make_flag(m, {constant_matrix({{1}, {0}, {0}}), constant_matrix({{0}, {1}, {0}})}, {Rational(1), Rational(1)});
            }),
            ErrorCode::DegenerateFlag);
  EXPECT_EQ(code_of([&] {
              make_flag(m, {constant_matrix({{1}, {0}, {0}}), constant_matrix({{0, 0}, {1, 0}, {0, 1}})},
                        {Rational(1), Rational(1)});
            }),
            ErrorCode::MalformedFlag);
}

TEST(FiltrationDataOf, Examples) {
  SplitSheafModel m{{1, 0, -1}};
  auto flag = coordinate_flag(m, {{0}, {0, 1}}, {Rational(1), Rational(1, 2)});
  auto f = filtration_data_of(m, flag);
  EXPECT_EQ(f.total_rank, 3u);
  EXPECT_EQ(f.total_hilb, (UniPoly{Rational(3), Rational(3)}));
  ASSERT_EQ(f.members.size(), 2u);
  EXPECT_EQ(f.members[0].degree, 1);
  EXPECT_EQ(f.members[0].hilb, (UniPoly{Rational(2), Rational(1)}));
  EXPECT_EQ(f.members[1].degree, 1);
  EXPECT_EQ(f.members[1].hilb, (UniPoly{Rational(3), Rational(2)}));
  EXPECT_EQ(f.members[1].alpha, Rational(1, 2));
  EXPECT_EQ(functional_L(f), -3 - Rational(3, 2));
}

TEST(FormProfile, Examples) {
  auto fb = standard_symplectic();
  auto flag = coordinate_flag(fb.model, {{0}}, {Rational(1)});
  EXPECT_EQ(form_profile(fb, flag), NonvanishingProfile(1, 2, {{1, 2}, {2, 2}}));

  auto diag = form({0, 0}, Symmetry::Symmetric, constant_matrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(form_profile(diag, flag), NonvanishingProfile(1, 2, {{1, 1}, {1, 2}, {2, 2}}));

  auto deg = degenerate_symplectic();
  auto kernel = coordinate_flag(deg.model, {{2, 3}}, {Rational(1)});
  EXPECT_EQ(form_profile(deg, kernel), NonvanishingProfile(1, 2, {{2, 2}}));
}

TEST(FormBundle, ValidationErrors) {
  EXPECT_EQ(code_of([] { validate(form({0, 0}, Symmetry::Symmetric, constant_matrix({{0, 1}, {-1, 0}}))); }),
            ErrorCode::MalformedForm);
  EXPECT_EQ(code_of([] { validate(form({0, 0}, Symmetry::Symmetric, constant_matrix({{0, 0}, {0, 0}}))); }),
            ErrorCode::MalformedForm);
  EXPECT_EQ(code_of([] { validate(form({1, 0}, Symmetry::Symmetric, constant_matrix({{1, 0}, {0, 1}}))); }),
            ErrorCode::MalformedForm);  // degrees do not sum to zero
  EXPECT_EQ(code_of([] { validate(form({1, -1}, Symmetry::Symmetric, constant_matrix({{1, 0}, {0, 0}}))); }),
            ErrorCode::MalformedForm);  // O(1)⊗O(1) → O has no sections
  validate(standard_symplectic());
}

TEST(KernelDestabilizer, Examples) {
  EXPECT_FALSE(kernel_destabilizer(standard_symplectic()).has_value());

  auto fb = degenerate_symplectic();
  auto k = kernel_destabilizer(fb);
  ASSERT_TRUE(k.has_value());
  ASSERT_EQ(k->steps.size(), 1u);
  EXPECT_EQ(k->steps[0].rank, 2u);
  EXPECT_EQ(k->steps[0].degree, 0);
  EXPECT_EQ(k->steps[0].alpha, 1);
  auto f = filtration_data_of(fb, *k);
  const Rational m = mu_profile(f, form_profile(fb, *k));
  EXPECT_EQ(m, -4);
  EXPECT_LE(m, 2 - 4);

  auto rank_one = form({0, 0, 0}, Symmetry::Symmetric, constant_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  k = kernel_destabilizer(rank_one);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->steps[0].rank, 2u);
  f = filtration_data_of(rank_one, *k);
  EXPECT_LT(mu_profile(f, form_profile(rank_one, *k)), 0);
}

TEST(KernelDestabilizer, PolynomialKernel) {
  // On O(1) ⊕ O(−1) the form [[0, 0], [0, x²]] kills the first summand.
  PolyMatrix e(2, 2);
  e(1, 1) = UniPoly{Rational(0), Rational(0), Rational(1)};
  auto fb = form({1, -1}, Symmetry::Symmetric, e);
  auto k = kernel_destabilizer(fb);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->steps[0].rank, 1u);
  EXPECT_EQ(k->steps[0].degree, 1);
}

TEST(SemistableForm, Examples) {
  auto v = semistable_form(standard_symplectic(), ExhaustiveCoordinate{}, false);
  EXPECT_TRUE(v.satisfied);

  v = semistable_form(degenerate_symplectic(), ExhaustiveCoordinate{}, false);
  ASSERT_FALSE(v.satisfied);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->steps[0].rank, 2u);
  EXPECT_LT(*v.witness_mu, 0);

  auto diag = form({0, 0}, Symmetry::Symmetric, constant_matrix({{1, 0}, {0, 1}}));
  EXPECT_TRUE(semistable_form(diag, ExhaustiveCoordinate{}, false).satisfied);
  EXPECT_TRUE(semistable_form(diag, ExhaustiveCoordinate{}, true).satisfied);
}

// The symplectic form on O² is semistable but not stable: the Lagrangian
// line has μ = 0 and M = 0 exactly.
TEST(SemistableForm, ZeroFunctionalOnLagrangianIsNotStable) {
  auto fb = standard_symplectic();
  auto flag = coordinate_flag(fb.model, {{0}}, {Rational(1)});
  auto f = filtration_data_of(fb, flag);
  EXPECT_TRUE(functional_M(f).is_zero());
  EXPECT_EQ(mu_profile(f, form_profile(fb, flag)), 0);
  auto v = semistable_form(fb, ExhaustiveCoordinate{}, true);
  EXPECT_FALSE(v.satisfied);
  EXPECT_EQ(v.witness_mu, std::optional<Rational>(0));
}

TEST(SemistableForm, UnbalancedSplittingIsUnstable) {
  auto fb = form({1, -1}, Symmetry::Antisymmetric, constant_matrix({{0, 1}, {-1, 0}}));
  auto v = semistable_form(fb, ExhaustiveCoordinate{}, false);
  ASSERT_FALSE(v.satisfied);
  EXPECT_EQ(v.witness->steps[0].degree, 1);
  EXPECT_FALSE(ramanathan_semistable(fb, ExhaustiveCoordinate{}, false).satisfied);

  PolyMatrix e = constant_matrix({{0, 1}, {1, 0}});
  e(1, 1) = UniPoly{Rational(0), Rational(0), Rational(1)};
  auto sym = form({1, -1}, Symmetry::Symmetric, e);
  EXPECT_FALSE(semistable_form(sym, ExhaustiveCoordinate{}, false).satisfied);
}

TEST(Ramanathan, IsotropicLine) {
  auto fb = form({0, 0}, Symmetry::Symmetric, constant_matrix({{1, 0}, {0, -1}}));
  auto iso = make_flag(fb.model, {constant_matrix({{1}, {1}})}, {Rational(1)});
  auto f = filtration_data_of(fb, iso);
  EXPECT_EQ(mu_profile(f, form_profile(fb, iso)), 0);
  EXPECT_EQ(functional_L(f), 0);
  EXPECT_TRUE(ramanathan_semistable(fb, SuppliedFlags{{iso}}, false).satisfied);
  auto v = ramanathan_semistable(fb, SuppliedFlags{{iso}}, true);
  EXPECT_FALSE(v.satisfied);
  EXPECT_EQ(v.witness_mu, std::optional<Rational>(0));
}

TEST(Ramanathan, NegativeDegreeIsotropicStep) {
  auto fb = standard_symplectic();
  PolyMatrix col(2, 1);
  col(0, 0) = UniPoly::constant(1);
  col(1, 0) = UniPoly{Rational(0), Rational(1)};
  auto flag = make_flag(fb.model, {col}, {Rational(1)});
  auto f = filtration_data_of(fb, flag);
  EXPECT_EQ(mu_profile(f, form_profile(fb, flag)), 0);
  EXPECT_EQ(functional_L(f), 2);
  EXPECT_TRUE(ramanathan_semistable(fb, SuppliedFlags{{flag}}, true).satisfied);
  EXPECT_TRUE(ramanathan_semistable(fb, ExhaustiveCoordinate{}, false).satisfied);
}

// On a trivial-determinant split model, M of a coordinate flag whose steps
// all have degree 0 vanishes identically.
TEST(FunctionalM, ZeroOnDegreeZeroCoordinateFlags) {
  Rng rng(54);
  for (int iter = 0; iter < 100; ++iter) {
    const auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 5));
    SplitSheafModel m{std::vector<std::int64_t>(r, 0)};
    auto chains = coordinate_chains(r);
    const auto& chain = chains[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(chains.size()) - 1))];
    std::vector<Rational> alphas;
    for (std::size_t j = 0; j < chain.size(); ++j) alphas.push_back(testing::random_positive(rng));
    auto f = filtration_data_of(m, coordinate_flag(m, chain, alphas));
    EXPECT_TRUE(functional_M(f).is_zero());
  }
}

TEST(SemistableForm, NondegenerateIffSemistableUnderBasisChange) {
  Rng rng(51);
  for (int iter = 0; iter < 50; ++iter) {
    const auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto sym = testing::uniform(rng, 0, 1) ? Symmetry::Symmetric : Symmetry::Antisymmetric;
    auto fb = testing::random_constant_form(rng, r, sym);
    auto g = testing::random_unimodular(rng, r);
    auto changed = testing::constant_part(fb.entries);
    changed = g.transposed() * changed * g;
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < r; ++l) fb.entries(k, l) = UniPoly::constant(changed(k, l));
    const bool nondegenerate = testing::leibniz_determinant(changed) != 0;
    EXPECT_EQ(semistable_form(fb, ExhaustiveCoordinate{}, false).satisfied, nondegenerate);
  }
}

TEST(SemistableForm, ImpliesRamanathan) {
  Rng rng(52);
  for (int iter = 0; iter < 60; ++iter) {
    const auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    auto fb = testing::random_constant_form(rng, r, testing::uniform(rng, 0, 1) ? Symmetry::Symmetric : Symmetry::Antisymmetric);
    for (bool strict : {false, true})
      if (semistable_form(fb, ExhaustiveCoordinate{}, strict).satisfied)
        EXPECT_TRUE(ramanathan_semistable(fb, ExhaustiveCoordinate{}, strict).satisfied);
  }
}

TEST(CoordinateChains, CountsAndCap) {
  EXPECT_EQ(coordinate_chains(2).size(), 2u);
  EXPECT_EQ(coordinate_chains(3).size(), 12u);
  EXPECT_EQ(code_of([] { coordinate_chains(7); }), ErrorCode::TooLarge);
  auto big = form({0, 0, 0, 0, 0, 0, 0}, Symmetry::Symmetric, constant_matrix(std::vector<std::vector<std::int64_t>>(7, std::vector<std::int64_t>(7, 1))));
  EXPECT_EQ(code_of([&] { semistable_form(big, ExhaustiveCoordinate{}, false); }), ErrorCode::TooLarge);
}

TEST(Dualize, Examples) {
  SplitSheafModel m{{1, -1}};
  auto flag = coordinate_flag(m, {{0}}, {Rational(2)});
  auto dual = dualize_filtration(m, flag);
  EXPECT_EQ(coordinate_sets(dual), (std::optional<std::vector<std::vector<std::size_t>>>{{{1}}}));
  EXPECT_EQ(dual.steps[0].alpha, 2);
  EXPECT_EQ(dual.steps[0].degree, 1);

  SplitSheafModel three{{2, 0, -2}};
  flag = coordinate_flag(three, {{1}, {0, 1}}, {Rational(1), Rational(3)});
  dual = dualize_filtration(three, flag);
  EXPECT_EQ(coordinate_sets(dual), (std::optional<std::vector<std::vector<std::size_t>>>{{{2}, {0, 2}}}));
  EXPECT_EQ(dual.steps[0].alpha, 3);
  EXPECT_EQ(dual.steps[1].alpha, 1);

  SplitSheafModel plane{{0, 0}};
  dual = dualize_filtration(plane, coordinate_flag(plane, {{0}}, {Rational(1)}));
  EXPECT_EQ(coordinate_sets(dual), (std::optional<std::vector<std::vector<std::size_t>>>{{{1}}}));

  SplitSheafModel four{{1, 0, 0, -1}};
  dual = dualize_filtration(four, coordinate_flag(four, {{0}, {0, 1, 2}}, {Rational(2), Rational(5)}));
  EXPECT_EQ(coordinate_sets(dual), (std::optional<std::vector<std::vector<std::size_t>>>{{{3}, {1, 2, 3}}}));
  EXPECT_EQ(dual.steps[0].rank, 1u);
  EXPECT_EQ(dual.steps[1].rank, 3u);
  EXPECT_EQ(dual.steps[0].alpha, 5);
  EXPECT_EQ(dual.steps[1].alpha, 2);
  EXPECT_EQ(dual.steps[0].degree, 1);
  EXPECT_EQ(dual.steps[1].degree, 1);

  auto skew = make_flag(m, {constant_matrix({{1}, {1}})}, {Rational(1)});
  EXPECT_EQ(code_of([&] { dualize_filtration(m, skew); }), ErrorCode::NotCoordinateFlag);
}

SplitSheafModel random_model(Rng& rng, std::size_t r) {
  SplitSheafModel m;
  std::int64_t sum = 0;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    m.degrees.push_back(testing::uniform(rng, -3, 3));
    sum += m.degrees.back();
  }
  m.degrees.push_back(-sum);
  return m;
}

TEST(Dualize, InvolutionAndSlopeInvariance) {
  Rng rng(53);
  for (int iter = 0; iter < 100; ++iter) {
    const auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 5));
    auto m = random_model(rng, r);
    auto chains = coordinate_chains(r);
    const auto& chain = chains[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(chains.size()) - 1))];
    std::vector<Rational> alphas;
    for (std::size_t j = 0; j < chain.size(); ++j) alphas.push_back(testing::random_positive(rng));
    auto flag = coordinate_flag(m, chain, alphas);
    auto dual = dualize_filtration(m, flag);
    auto back = dualize_filtration(dual_model(m), dual);
    EXPECT_EQ(coordinate_sets(back), coordinate_sets(flag));
    for (std::size_t j = 0; j < flag.steps.size(); ++j) {
      EXPECT_EQ(back.steps[j].alpha, flag.steps[j].alpha);
      EXPECT_EQ(back.steps[j].degree, flag.steps[j].degree);
    }
    EXPECT_EQ(functional_L(filtration_data_of(dual_model(m), dual)), functional_L(filtration_data_of(m, flag)));
  }
}

}  // namespace
}  // namespace gitss
