#include "pwpoly/hesspoly.hpp"

#include <algorithm>
#include <numeric>

#include "pwpoly/parallel.hpp"

namespace pwpoly {

GradedIntPolynomial eulerian(int m)
{
  if (m <= 0)
    throw std::invalid_argument("eulerian: m must be positive, got " + std::to_string(m));
  std::vector<BigInt> row{1};
  for (int j = 2; j <= m; ++j) {
    std::vector<BigInt> next(static_cast<std::size_t>(j), 0);
    for (int k = 0; k < j; ++k) {
      if (k < j - 1)
        next[k] += BigInt(k + 1) * row[k];
      if (k >= 1)
        next[k] += BigInt(j - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return GradedIntPolynomial(std::move(row));
}

GradedIntPolynomial q_integer(int m)
{
  if (m <= 0)
    throw std::invalid_argument("q_integer: m must be positive, got " + std::to_string(m));
  return GradedIntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(m), 1));
}

CycleType cycle_type(const SignedPermutation& w, int n)
{
  CycleType ct;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w(j)) {
      seen[j] = 1;
      ++len;
    }
    ct.lambda.push_back(len);
  }
  std::sort(ct.lambda.rbegin(), ct.lambda.rend());
  return ct;
}

GradedIntPolynomial chi_typeA(const SignedPermutation& w, int n)
{
  auto ct = cycle_type(w, n);
  GradedIntPolynomial out = eulerian(ct.length());
  for (int part : ct.lambda)
    out = out * q_integer(part);
  return out;
}

GradedIntPolynomial h_via_characters_A(const ParabolicK& pk, unsigned workers, std::uint64_t budget)
{
  if (pk.type.family != Family::A)
    throw std::invalid_argument("character formula is implemented for type A only");
  auto wk = enumerate_parabolic(pk, budget);
  const int n = pk.type.n;
  std::vector<GradedIntPolynomial> partial(std::max(1u, workers));
  parallel_for(partial.size(), workers, [&](std::size_t part) {
    for (std::size_t i = part; i < wk.size(); i += partial.size())
      partial[part] += chi_typeA(wk[i], n);
  });
  GradedIntPolynomial sum;
  for (auto& p : partial)
    sum += p;
  try {
    return sum.divided_exactly_by(BigInt(static_cast<unsigned long long>(wk.size())));
  } catch (const std::domain_error&) {
    throw InternalConsistencyError("character average for " + pk.type.name() + " K=" + pk.k_string() +
                                   " is not integral: " + sum.to_string() + " / " + std::to_string(wk.size()));
  }
}

bool in_WK_set(const SignedPermutation& w, const ParabolicK& pk, const RootSystem& rs)
{
  auto inv = w.inverse();
  for (int k : pk.K) {
    auto v = act_on_vector(inv, rs.simple_roots[static_cast<std::size_t>(k - 1)], rs.type);
    if (!rs.is_positive_root(v) && !rs.is_negative_simple_root(v))
      return false;
  }
  return true;
}

bool in_WK_set(const SignedPermutation& w, const ParabolicK& pk)
{
  return in_WK_set(w, pk, build_root_system(pk.type));
}

bool in_WK_set_typeA(const SignedPermutation& w, const ParabolicK& pk)
{
  if (pk.type.family != Family::A)
    throw std::invalid_argument("in_WK_set_typeA called on " + pk.type.name());
  auto inv = w.inverse();
  for (int k : pk.K) {
    if (inv(k) - inv(k + 1) > 1)
      return false;
  }
  return true;
}

int d_stat(const SignedPermutation& w, const RootSystem& rs)
{
  int d = 0;
  for (const auto& alpha : rs.simple_roots) {
    auto v = act_on_vector(w, alpha, rs.type);
    for (auto& c : v)
      c = -c;
    if (rs.is_positive_root(v))
      ++d;
  }
  return d;
}

int d_stat(const SignedPermutation& w, const RSType& type)
{
  return d_stat(w, build_root_system(type));
}

PrecupResult precup_sweep(const ParabolicK& pk, unsigned workers, std::uint64_t budget, bool collect_members)
{
  const auto order = group_order(pk.type);
  if (order > budget)
    throw BudgetExceeded(order, budget);
  const auto rs = build_root_system(pk.type);
  const int blocks = pk.type.ground_size();
  const int rank = pk.type.rank();
  struct Block {
    std::vector<std::uint64_t> hist;
    std::vector<WKElementStat> members;
  };
  std::vector<Block> parts(static_cast<std::size_t>(blocks));
  parallel_for(parts.size(), workers, [&](std::size_t b) {
    auto& part = parts[b];
    part.hist.assign(static_cast<std::size_t>(rank) + 1, 0);
    for_each_group_element_in_block(pk.type, static_cast<int>(b) + 1, [&](const SignedPermutation& w) {
      if (!in_WK_set(w, pk, rs))
        return;
      int d = d_stat(w, rs);
      ++part.hist[static_cast<std::size_t>(d)];
      if (collect_members)
        part.members.push_back({w, d});
    });
  });
  PrecupResult out;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(rank) + 1, 0);
  for (auto& part : parts) {
    for (std::size_t d = 0; d < part.hist.size(); ++d) {
      coeffs[d] += BigInt(static_cast<unsigned long long>(part.hist[d]));
      out.wk_size += part.hist[d];
    }
    for (auto& m : part.members)
      out.members.push_back(std::move(m));
  }
  out.h = GradedIntPolynomial(std::move(coeffs));
  return out;
}

GradedIntPolynomial h_via_precup(const ParabolicK& pk, unsigned workers, std::uint64_t budget)
{
  return precup_sweep(pk, workers, budget, false).h;
}

std::vector<std::vector<int>> dynkin_isomorphisms(const RootSystem& from, const RootSystem& to)
{
  std::vector<std::vector<int>> out;
  const int r = from.rank();
  if (to.rank() != r)
    return out;
  auto a = cartan_matrix(from);
  auto b = cartan_matrix(to);
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        ok = a[i][j] == b[p[i]][p[j]];
    if (ok) {
      std::vector<int> map(static_cast<std::size_t>(r) + 1, 0);
      for (int i = 0; i < r; ++i)
        map[static_cast<std::size_t>(i) + 1] = p[i] + 1;
      out.push_back(std::move(map));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ParabolicK relabel(const ParabolicK& pk, const RSType& target, const std::vector<int>& p)
{
  std::vector<int> K;
  for (int k : pk.K)
    K.push_back(p.at(static_cast<std::size_t>(k)));
  return make_parabolic(target, std::move(K));
}

} // namespace pwpoly
