#include "pwpoly/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwpoly {

std::string RSType::name() const
{
  return std::string(1, family_letter(family)) + "_" + std::to_string(rank());
}

RSType make_rstype(Family family, int n)
{
  if (n < 2)
    throw std::invalid_argument("root system needs n >= 2 (got " + std::to_string(n) + ")");
  if (n > 16)
    throw std::invalid_argument("n > 16 is not supported (got " + std::to_string(n) + ")");
  return RSType{family, n};
}

Family parse_family(const std::string& letter)
{
  if (letter == "A" || letter == "a")
    return Family::A;
  if (letter == "B" || letter == "b")
    return Family::B;
  if (letter == "C" || letter == "c")
    return Family::C;
  if (letter == "D" || letter == "d")
    return Family::D;
  throw std::invalid_argument("unknown root system type '" + letter + "' (expected A, B, C or D)");
}

char family_letter(Family f)
{
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::C: return 'C';
  case Family::D: return 'D';
  }
  return '?';
}

Rational pairing(const RVec& x, const RVec& f)
{
  return dot(x, f);
}

RVec normalize_dual(const RSType& type, RVec f)
{
  if (type.family != Family::A)
    return f;
  Rational mean = 0;
  for (const auto& c : f)
    mean += c;
  mean /= static_cast<int>(f.size());
  for (auto& c : f)
    c -= mean;
  return f;
}

namespace {

RVec unit(int n, int i, int scale = 1)
{
  RVec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i - 1)] = scale;
  return v;
}

RVec diff(int n, int i, int j)
{
  RVec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i - 1)] = 1;
  v[static_cast<std::size_t>(j - 1)] = -1;
  return v;
}

RVec sum(int n, int i, int j)
{
  RVec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i - 1)] = 1;
  v[static_cast<std::size_t>(j - 1)] = 1;
  return v;
}

// Solves <a_i, x_j> = delta_ij for the x_j; for type A the extra row forces
// coordinate sum zero.
std::vector<RVec> dual_basis(const RSType& type, const std::vector<RVec>& basis)
{
  const int n = type.n;
  Matrix m(0, static_cast<std::size_t>(n));
  for (const auto& b : basis)
    m.append_row(b);
  if (type.family == Family::A)
    m.append_row(RVec(static_cast<std::size_t>(n), Rational(1)));
  std::vector<RVec> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    RVec rhs(m.rows());
    rhs[j] = 1;
    auto x = solve_unique(m, rhs);
    if (!x)
      throw std::logic_error("simple roots are not a basis for " + type.name());
    out.push_back(std::move(*x));
  }
  return out;
}

} // namespace

RootSystem build_root_system(RSType type)
{
  type = make_rstype(type.family, type.n);
  const int n = type.n;
  RootSystem rs;
  rs.type = type;

  for (int i = 1; i < n; ++i)
    rs.simple_roots.push_back(diff(n, i, i + 1));
  for (int i = 1; i < n; ++i)
    rs.coroots.push_back(diff(n, i, i + 1));

  switch (type.family) {
  case Family::A:
    break;
  case Family::B:
    rs.simple_roots.push_back(unit(n, n));
    rs.coroots.push_back(unit(n, n, 2));
    break;
  case Family::C:
    rs.simple_roots.push_back(unit(n, n, 2));
    rs.coroots.push_back(unit(n, n));
    break;
  case Family::D:
    rs.simple_roots.push_back(sum(n, n - 1, n));
    rs.coroots.push_back(sum(n, n - 1, n));
    break;
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      rs.positive_roots.push_back(diff(n, i, j));
      if (type.family != Family::A)
        rs.positive_roots.push_back(sum(n, i, j));
    }
    if (type.family == Family::B)
      rs.positive_roots.push_back(unit(n, i));
    if (type.family == Family::C)
      rs.positive_roots.push_back(unit(n, i, 2));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  rs.fundamental_coweights = dual_basis(type, rs.simple_roots);
  rs.fundamental_weights = dual_basis(type, rs.coroots);
  return rs;
}

bool RootSystem::is_positive_root(const RVec& v) const
{
  return std::binary_search(positive_roots.begin(), positive_roots.end(), v);
}

bool RootSystem::is_root(const RVec& v) const
{
  RVec neg = v;
  for (auto& c : neg)
    c = -c;
  return is_positive_root(v) || is_positive_root(neg);
}

bool RootSystem::is_negative_simple_root(const RVec& v) const
{
  RVec neg = v;
  for (auto& c : neg)
    c = -c;
  return std::find(simple_roots.begin(), simple_roots.end(), neg) != simple_roots.end();
}

std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs)
{
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      c[i][j] = pairing(rs.simple_roots[j], rs.coroots[i]).convert_to<int>();
  }
  return c;
}

Matrix coweight_pairing(const RootSystem& rs)
{
  const auto r = static_cast<std::size_t>(rs.rank());
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      m(i, j) = pairing(rs.simple_roots[i], rs.fundamental_coweights[j]);
  }
  return m;
}

std::optional<std::map<int, Rational>> coroot_span_expand(const RVec& v, std::span<const int> ks,
                                                          const RootSystem& rs)
{
  const RVec target = normalize_dual(rs.type, v);
  std::map<int, Rational> out;
  if (ks.empty()) {
    if (!is_zero(target))
      return std::nullopt;
    return out;
  }
  const auto n = static_cast<std::size_t>(rs.type.n);
  Matrix a(n, ks.size());
  for (std::size_t c = 0; c < ks.size(); ++c) {
    const int k = ks[c];
    if (k < 1 || k > rs.rank())
      throw std::out_of_range("simple root index " + std::to_string(k) + " out of range for " +
                              rs.type.name());
    for (std::size_t r = 0; r < n; ++r)
      a(r, c) = rs.coroots[static_cast<std::size_t>(k - 1)][r];
  }
  // The coroots are linearly independent, so any solution is the solution.
  auto x = solve_any(a, target);
  if (!x)
    return std::nullopt;
  for (std::size_t c = 0; c < ks.size(); ++c)
    out[ks[c]] = (*x)[c];
  return out;
}

} // namespace pwpoly
