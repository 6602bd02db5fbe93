#include <gtest/gtest.h>

#include "pwpoly/cohomcheck.hpp"
#include "pwpoly/facecount.hpp"
#include "pwpoly/hesspoly.hpp"

using namespace pwpoly;

namespace {

RSType T(Family f, int n) { return make_rstype(f, n); }

Monomial tau(const Presentation& p, std::initializer_list<Subset> subsets)
{
  Monomial m;
  for (auto s : subsets)
    m = m * Monomial::generator(p.index_of(s));
  return m;
}

MonomialCombination sum(const Presentation& p, std::initializer_list<std::initializer_list<Subset>> terms)
{
  MonomialCombination x;
  for (auto t : terms)
    x.add(tau(p, t), 1);
  return x;
}

std::string stat(const SuiteReport& r, const std::string& key)
{
  for (const auto& [k, v] : r.stats)
    if (k == key)
      return v;
  return "";
}

const Subset s1 = Subset::of({1}), s2 = Subset::of({2}), s3 = Subset::of({3});
const Subset s12 = Subset::of({1, 2}), s13 = Subset::of({1, 3}), s23 = Subset::of({2, 3});

} // namespace

TEST(Presentation, FullTypeA)
{
  auto p = presentation_full(T(Family::A, 3));
  EXPECT_EQ(p.generators.size(), 6u);
  EXPECT_EQ(p.linear_relation_matrix.rows(), 2u);
  EXPECT_EQ(p.nonface_pairs.size(), 9u);  // 15 pairs, 6 hexagon edges

  auto q = presentation_full(T(Family::A, 2));
  EXPECT_EQ(q.generators.size(), 2u);
  EXPECT_EQ(q.linear_relation_matrix.rows(), 1u);
  EXPECT_EQ(q.nonface_pairs.size(), 1u);
}

TEST(Presentation, TypeDKeepsSwappedPairsAsFaces)
{
  const int n = 3;
  auto p = presentation_full(T(Family::D, n));
  auto a = p.index_of(Subset::of({1, 2, 3}));
  auto b = p.index_of(Subset::of({1, 2, bar(3, n)}));
  for (auto [i, j] : p.nonface_pairs)
    EXPECT_FALSE((i == a && j == b) || (i == b && j == a));
  EXPECT_TRUE(p.is_face(tau(p, {Subset::of({1, 2, 3}), Subset::of({1, 2, bar(3, n)})})));
}

TEST(Presentation, Partitioned)
{
  auto p = presentation_partitioned(make_parabolic(T(Family::A, 3), {1}));
  EXPECT_EQ(p.generators, (std::vector<FacetLabel>{FacetLabel::of_subset(s1), FacetLabel::of_subset(s3),
                                                   FacetLabel::of_subset(s12), FacetLabel::of_subset(s13),
                                                   FacetLabel::of_hyperplane(1)}));
  auto full = presentation_full(T(Family::B, 3));
  auto empty = presentation_partitioned(make_parabolic(T(Family::B, 3), {}));
  EXPECT_EQ(full.generators, empty.generators);
  EXPECT_EQ(full.nonface_pairs, empty.nonface_pairs);

  auto b = presentation_partitioned(make_parabolic(T(Family::B, 3), {2, 3}));
  EXPECT_EQ(b.generators.size(), 10u);
  EXPECT_EQ(b.linear_relation_matrix.rows(), 3u);
}

TEST(Presentation, LinearRelationsAreNormalsPaired)
{
  // row u, column I: <u, e_I>; for type A row 1 is t_1 - t_2
  auto p = presentation_full(T(Family::A, 3));
  EXPECT_EQ(p.linear_relation_matrix(0, p.index_of(s1)), 1);
  EXPECT_EQ(p.linear_relation_matrix(0, p.index_of(s2)), -1);
  EXPECT_EQ(p.linear_relation_matrix(0, p.index_of(s12)), 0);
  EXPECT_EQ(p.linear_relation_matrix(1, p.index_of(s13)), -1);
}

TEST(Reduce, Examples)
{
  auto p = presentation_full(T(Family::A, 3));
  EXPECT_TRUE(reduce_by_nonfaces(MonomialCombination::of(tau(p, {s1, s2})), p).is_zero());
  auto nested = MonomialCombination::of(tau(p, {s1, s12}));
  EXPECT_EQ(reduce_by_nonfaces(nested, p), nested);
  auto m = tau(p, {s1, s12, s2}) * Monomial::generator(p.index_of(s1));
  EXPECT_EQ(m.degree(), 4);
  EXPECT_TRUE(reduce_by_nonfaces(MonomialCombination::of(m), p).is_zero());
}

TEST(Combination, Arithmetic)
{
  auto p = presentation_full(T(Family::A, 3));
  auto x = MonomialCombination::of(tau(p, {s1}), 2);
  auto y = MonomialCombination::of(tau(p, {s1}), -2);
  EXPECT_TRUE((x + y).is_zero());
  EXPECT_EQ((x - y).coeff(tau(p, {s1})), 4);
  auto sq = x * x;
  EXPECT_EQ(sq.coeff(Monomial::generator(p.index_of(s1), 2)), 4);
  EXPECT_EQ(p.to_string(sum(p, {{s1}, {s1, s12}})), "tau{1} + tau{1}*tau{1,2}");
}

TEST(OrbitSum, Examples)
{
  auto t = T(Family::A, 3);
  auto p = presentation_full(t);
  EXPECT_EQ(orbit_sum(s13, make_parabolic(t, {})), MonomialCombination::of(tau(p, {s13})));
  EXPECT_EQ(orbit_sum(s1, make_parabolic(t, {1, 2})), sum(p, {{s1}, {s2}, {s3}}));
  EXPECT_EQ(orbit_sum(s12, make_parabolic(t, {1, 2})), sum(p, {{s12}, {s23}, {s13}}));
}

TEST(OrbitProduct, Examples)
{
  auto t = T(Family::A, 3);
  EXPECT_TRUE(verify_orbit_product(make_parabolic(t, {}), {s1, s12}, {2, 1}));
  EXPECT_TRUE(verify_orbit_product(make_parabolic(t, {1, 2}), {s1, s12}, {1, 1}));
}

TEST(OrbitProduct, AlternatingSubgroupFails)
{
  auto t = T(Family::A, 3);
  auto p = presentation_full(t);
  auto alt = alternating_subgroup(t);
  EXPECT_EQ(alt.size(), 3u);
  auto cmp = compare_orbit_product({s1, s12}, {1, 1}, alt, p);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.direct, sum(p, {{s1, s12}, {s2, s23}, {s3, s13}}));
  EXPECT_EQ(cmp.product, sum(p, {{s1, s12}, {s1, s13}, {s2, s12}, {s2, s23}, {s3, s23}, {s3, s13}}));
}

TEST(OrbitProduct, RejectsBadChains)
{
  auto pk = make_parabolic(T(Family::A, 3), {1});
  EXPECT_THROW(verify_orbit_product(pk, {s12, s1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(verify_orbit_product(pk, {s1}, {1, 1}), std::invalid_argument);
}

TEST(OrbitProduct, Sweeps)
{
  for (auto f : {Family::A, Family::B, Family::D})
    for (int n = 2; n <= 3; ++n)
      for (const auto& pk : all_parabolics(T(f, n))) {
        auto r = sweep_orbit_product(pk, 3, 2);
        EXPECT_TRUE(r.pass()) << r.summary();
        EXPECT_GT(r.checked, 0u);
      }
}

TEST(CCoefficients, PaperExamples)
{
  auto pk = make_parabolic(T(Family::A, 4), {1, 2, 3});
  auto s = [&](int i) { return simple_reflection(pk.type, i); };
  EXPECT_EQ(c_coefficients(s1, s(1), pk), (std::map<int, BigInt>{{1, 1}, {2, 0}, {3, 0}}));
  auto v = s(2) * s(1) * s(3) * s(2);
  EXPECT_EQ(act_on_subset(v, s12), Subset::of({3, 4}));
  EXPECT_EQ(c_coefficients(s12, v, pk), (std::map<int, BigInt>{{1, 1}, {2, 2}, {3, 1}}));
  for (auto& [k, c] : c_coefficients(s13, SignedPermutation::identity(4), pk))
    EXPECT_EQ(c, 0);
}

TEST(CCoefficients, OutsideSpanIsAViolation)
{
  // v = s_3 is not in W_{1}, and e_{3} - e_{4} is not a multiple of α_1^∨
  auto pk = make_parabolic(T(Family::A, 4), {1});
  EXPECT_THROW(c_coefficients(s3, simple_reflection(pk.type, 3), pk), InvariantViolation);
}

TEST(CCoefficients, Sweeps)
{
  auto a = verify_c_vanishing(make_parabolic(T(Family::A, 4), {1, 2, 3}));
  EXPECT_TRUE(a.pass()) << a.summary();
  EXPECT_NE(stat(a, "hypothesis_hits"), "0");
  for (auto f : {Family::B, Family::D})
    for (const auto& pk : all_parabolics(T(f, 3))) {
      auto c = verify_c_coefficients(pk);
      EXPECT_TRUE(c.pass()) << c.summary();
      auto r = verify_c_vanishing(pk);
      EXPECT_TRUE(r.pass()) << r.summary();
    }
}

TEST(Phi, EmptyKIsIdentity)
{
  auto t = T(Family::A, 4);
  PhiMap phi(make_parabolic(t, {}));
  for (std::size_t g = 0; g < phi.partitioned().generators.size(); ++g)
    EXPECT_EQ(phi.image(g), MonomialCombination::of(Monomial::generator(phi.full().index_of(phi.partitioned().generators[g]))));
}

TEST(Phi, HyperplaneGenerator)
{
  // K = {1} in A_2: s_1 moves {1} to {2} (c = 1) and {1,3} to {2,3} (c = 1);
  // {3} and {1,2} are fixed
  auto pk = make_parabolic(T(Family::A, 3), {1});
  PhiMap phi(pk);
  EXPECT_EQ(phi.image(FacetLabel::of_hyperplane(1)), sum(phi.full(), {{s2}, {s23}}));
  EXPECT_EQ(phi.image(FacetLabel::of_subset(s1)), sum(phi.full(), {{s1}, {s2}}));
  EXPECT_EQ(phi_of_generator(FacetLabel::of_subset(s3), pk), sum(phi.full(), {{s3}}));
}

TEST(Phi, DegreeTwoIdeal)
{
  auto p = presentation_full(T(Family::A, 3));
  DegreeTwoIdeal ideal(p);
  // a vertex class survives
  EXPECT_FALSE(ideal.contains(MonomialCombination::of(tau(p, {s1, s12}))));
  // a linear relation times a generator does not
  auto rel = p.linear_form(RVec{Rational(1), Rational(-1), Rational(0)});
  EXPECT_TRUE(ideal.contains(reduce_by_nonfaces(rel * MonomialCombination::of(tau(p, {s12})), p)));
}

TEST(Phi, KernelSweeps)
{
  for (const auto& pk : all_parabolics(T(Family::A, 4))) {
    auto r = verify_phi_kernel(pk);
    EXPECT_TRUE(r.pass()) << r.summary();
  }
  for (const auto& pk : all_parabolics(T(Family::D, 3))) {
    auto r = verify_phi_kernel(pk);
    EXPECT_TRUE(r.pass()) << r.summary();
  }
}

TEST(Phi, Degree2Examples)
{
  auto full = verify_deg2_surjectivity(make_parabolic(T(Family::A, 4), {}));
  EXPECT_TRUE(full.pass()) << full.summary();
  EXPECT_EQ(stat(full, "fixed_dim"), stat(full, "h2_dim"));

  auto a = verify_deg2_surjectivity(make_parabolic(T(Family::A, 5), {1, 2, 4}));
  EXPECT_TRUE(a.pass()) << a.summary();
  EXPECT_EQ(stat(a, "fixed_dim"), "9");

  auto bk = make_parabolic(T(Family::B, 3), {2, 3});
  auto b = verify_deg2_surjectivity(bk);
  EXPECT_TRUE(b.pass()) << b.summary();
  EXPECT_EQ(stat(b, "fixed_dim"), h_via_precup(bk).coeff(1).str());
}
