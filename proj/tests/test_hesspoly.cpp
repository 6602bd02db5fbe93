#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pwpoly/facecount.hpp"
#include "pwpoly/hesspoly.hpp"

using namespace pwpoly;

namespace {

RSType T(Family f, int n) { return make_rstype(f, n); }

SignedPermutation perm(const std::string& one_line)
{
  std::vector<int> img;
  for (char c : one_line)
    img.push_back(c - '0');
  return SignedPermutation(img);
}

} // namespace

TEST(Eulerian, SmallCases)
{
  EXPECT_EQ(eulerian(1), GradedIntPolynomial({1}));
  EXPECT_EQ(eulerian(3), GradedIntPolynomial({1, 4, 1}));
  EXPECT_EQ(eulerian(4), GradedIntPolynomial({1, 11, 11, 1}));
  for (int m = 1; m <= 8; ++m)
    EXPECT_EQ(eulerian(m).to_int64(), oracle::eulerian(m)) << m;
}

TEST(QInteger, SmallCases)
{
  EXPECT_EQ(q_integer(1), GradedIntPolynomial({1}));
  EXPECT_EQ(q_integer(2), GradedIntPolynomial({1, 1}));
  EXPECT_EQ(q_integer(4), GradedIntPolynomial({1, 1, 1, 1}));
}

TEST(Characters, CycleTypes)
{
  EXPECT_EQ(cycle_type(perm("23451"), 5).lambda, (std::vector<int>{5}));
  EXPECT_EQ(cycle_type(perm("23154"), 5).lambda, (std::vector<int>{3, 2}));
  EXPECT_EQ(cycle_type(perm("123"), 3).lambda, (std::vector<int>{1, 1, 1}));
}

TEST(Characters, ChiExamples)
{
  EXPECT_EQ(chi_typeA(perm("123"), 3), GradedIntPolynomial({1, 4, 1}));
  EXPECT_EQ(chi_typeA(perm("23451"), 5), GradedIntPolynomial({1, 1, 1, 1, 1}));
  EXPECT_EQ(chi_typeA(perm("23154"), 5), eulerian(2) * q_integer(3) * q_integer(2));
}

TEST(Characters, Averages)
{
  EXPECT_EQ(h_via_characters_A(make_parabolic(T(Family::A, 5), {1, 2, 4})), GradedIntPolynomial({1, 9, 17, 9, 1}));
  EXPECT_EQ(h_via_characters_A(make_parabolic(T(Family::A, 3), {1, 2})), GradedIntPolynomial({1, 2, 1}));
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(h_via_characters_A(make_parabolic(T(Family::A, n), {})), eulerian(n));
}

TEST(Characters, TypeAOnly)
{
  EXPECT_THROW(h_via_characters_A(make_parabolic(T(Family::B, 3), {1})), std::invalid_argument);
}

TEST(Precup, MembershipExamples)
{
  auto pk = make_parabolic(T(Family::A, 4), {1, 3});
  EXPECT_TRUE(in_WK_set(SignedPermutation::identity(4), pk));
  EXPECT_TRUE(in_WK_set(perm("3412"), pk));
  EXPECT_FALSE(in_WK_set(perm("2314"), pk));
}

TEST(Precup, DStatExamples)
{
  EXPECT_EQ(d_stat(SignedPermutation::identity(4), T(Family::A, 4)), 0);
  EXPECT_EQ(d_stat(perm("4321"), T(Family::A, 4)), 3);
  // longest element of B_2 is -1: 1 -> 1̄, 2 -> 2̄
  EXPECT_EQ(d_stat(SignedPermutation({4, 3, 2, 1}), T(Family::B, 2)), 2);
}

TEST(Precup, PaperWKSet)
{
  auto r = precup_sweep(make_parabolic(T(Family::A, 4), {1, 3}), 1, kDefaultBudget, true);
  EXPECT_EQ(r.h, GradedIntPolynomial({1, 6, 6, 1}));
  EXPECT_EQ(r.wk_size, 14u);
  std::set<std::string> got;
  for (const auto& m : r.members)
    got.insert(m.w.one_line(T(Family::A, 4)));
  EXPECT_EQ(got, (std::set<std::string>{"1234", "1243", "1324", "1342", "1432", "2134", "2143", "3124", "3142",
                                        "3214", "3412", "3421", "4312", "4321"}));
}

TEST(Precup, Examples)
{
  EXPECT_EQ(h_via_precup(make_parabolic(T(Family::A, 3), {1, 2})), GradedIntPolynomial({1, 2, 1}));
  auto r = precup_sweep(make_parabolic(T(Family::A, 3), {1, 2}), 1, kDefaultBudget, true);
  std::set<std::string> got;
  for (const auto& m : r.members)
    got.insert(m.w.one_line(T(Family::A, 3)));
  EXPECT_EQ(got, (std::set<std::string>{"123", "132", "213", "321"}));
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(h_via_precup(make_parabolic(T(Family::A, n), {})), eulerian(n));
}

// K = ∅ gives the descent polynomials of the Weyl groups
TEST(Precup, WeylEulerianPolynomials)
{
  EXPECT_EQ(h_via_precup(make_parabolic(T(Family::B, 2), {})), GradedIntPolynomial({1, 6, 1}));
  EXPECT_EQ(h_via_precup(make_parabolic(T(Family::B, 3), {})), GradedIntPolynomial({1, 23, 23, 1}));
  EXPECT_EQ(h_via_precup(make_parabolic(T(Family::D, 4), {})), GradedIntPolynomial({1, 44, 102, 44, 1}));
}

TEST(Precup, MatchesRootOracle)
{
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 2; n <= 4; ++n)
      for (const auto& pk : all_parabolics(T(f, n)))
        EXPECT_EQ(h_via_precup(pk).to_int64(), oracle::precup(pk)) << pk.type.name() << " " << pk.k_string();
}

TEST(Precup, TypeAFastPathAgrees)
{
  for (int n = 2; n <= 6; ++n) {
    auto t = T(Family::A, n);
    auto rs = build_root_system(t);
    auto group = enumerate_group(t);
    for (const auto& pk : all_parabolics(t))
      for (const auto& w : group)
        ASSERT_EQ(in_WK_set(w, pk, rs), in_WK_set_typeA(w, pk)) << w.one_line(t) << " " << pk.k_string();
  }
}

TEST(Precup, DStatIsDescentsInTypeA)
{
  auto t = T(Family::A, 5);
  for (const auto& w : enumerate_group(t))
    EXPECT_EQ(d_stat(w, t), oracle::descents(w.images()));
}

TEST(Precup, WorkersDoNotChangeResult)
{
  auto pk = make_parabolic(T(Family::D, 4), {1, 3});
  auto one = precup_sweep(pk, 1, kDefaultBudget, true);
  auto four = precup_sweep(pk, 4, kDefaultBudget, true);
  EXPECT_EQ(one.h, four.h);
  ASSERT_EQ(one.members.size(), four.members.size());
  for (std::size_t i = 0; i < one.members.size(); ++i)
    EXPECT_EQ(one.members[i].w, four.members[i].w);
}

TEST(Precup, BudgetRefusal)
{
  EXPECT_THROW(h_via_precup(make_parabolic(T(Family::A, 6), {1}), 1, 100), BudgetExceeded);
}

TEST(CrossMethod, FacesEqualPrecupSmall)
{
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 2; n <= 4; ++n)
      for (const auto& pk : all_parabolics(T(f, n)))
        EXPECT_EQ(h_polynomial_faces(pk), h_via_precup(pk)) << pk.type.name() << " " << pk.k_string();
}

TEST(Dynkin, D3RelabelsToA3)
{
  auto d3 = build_root_system(T(Family::D, 3));
  auto a3 = build_root_system(T(Family::A, 4));
  auto maps = dynkin_isomorphisms(d3, a3);
  ASSERT_EQ(maps.size(), 2u);  // the diagram flip
  for (const auto& p : maps)
    EXPECT_EQ(p[1], 2);  // central node to central node
  for (const auto& pk : all_parabolics(d3.type)) {
    auto image = relabel(pk, a3.type, maps[0]);
    EXPECT_EQ(h_via_precup(pk), h_via_precup(image)) << pk.k_string() << " -> " << image.k_string();
  }
}

TEST(Dynkin, NoIsomorphismAcrossRanks)
{
  EXPECT_TRUE(dynkin_isomorphisms(build_root_system(T(Family::B, 3)), build_root_system(T(Family::A, 3))).empty());
  // B and C have transposed Cartan matrices
  EXPECT_TRUE(dynkin_isomorphisms(build_root_system(T(Family::B, 3)), build_root_system(T(Family::C, 3))).empty());
}

TEST(Properties, PalindromicNormalised)
{
  for (auto f : {Family::A, Family::B, Family::D})
    for (int n = 2; n <= 4; ++n)
      for (const auto& pk : all_parabolics(T(f, n))) {
        auto h = h_via_precup(pk);
        EXPECT_TRUE(h.is_palindromic());
        EXPECT_EQ(h.coeff(0), 1);
        EXPECT_EQ(h.degree(), pk.type.rank());
        EXPECT_EQ(h.eval(1), BigInt(f_vector(pk).f[0]));
      }
}
