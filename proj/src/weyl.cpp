#include "pwpoly/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace pwpoly {

Subset Subset::of(std::initializer_list<int> elems)
{
  Subset s;
  for (int e : elems)
    s.insert(e);
  return s;
}

Subset Subset::interval(int lo, int hi)
{
  Subset s;
  for (int e = lo; e <= hi; ++e)
    s.insert(e);
  return s;
}

std::vector<int> Subset::elements() const
{
  std::vector<int> out;
  for (std::uint32_t b = bits; b; b &= b - 1)
    out.push_back(__builtin_ctz(b) + 1);
  return out;
}

Subset overline(Subset s, int n)
{
  Subset out;
  for (int e : s.elements())
    out.insert(bar(e, n));
  return out;
}

int bar_count(Subset s, int n)
{
  return (s & Subset::interval(n + 1, 2 * n)).size();
}

std::string to_string(Subset s, const RSType& type)
{
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first)
      out += ",";
    first = false;
    if (type.has_bars() && e > type.n)
      out += "-" + std::to_string(bar(e, type.n));
    else
      out += std::to_string(e);
  }
  return out + "}";
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {}

SignedPermutation SignedPermutation::identity(int size)
{
  std::vector<int> img(static_cast<std::size_t>(size));
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation(std::move(img));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
{
  std::vector<int> img(b.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = a(b.images_[i]);
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const
{
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return SignedPermutation(std::move(img));
}

std::string SignedPermutation::one_line(const RSType& type) const
{
  std::string out;
  for (int i = 1; i <= type.n; ++i) {
    if (type.n > 9 && i > 1)
      out += ",";
    const int img = (*this)(i);
    if (type.has_bars() && img > type.n)
      out += "-" + std::to_string(bar(img, type.n));
    else
      out += std::to_string(img);
  }
  return out;
}

bool is_group_element(const SignedPermutation& u, const RSType& type)
{
  const int m = type.ground_size();
  if (u.size() != m)
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= m; ++i) {
    const int img = u(i);
    if (img < 1 || img > m || seen[static_cast<std::size_t>(img)])
      return false;
    seen[static_cast<std::size_t>(img)] = true;
  }
  if (!type.has_bars())
    return true;
  int bars = 0;
  for (int i = 1; i <= type.n; ++i) {
    if (u(bar(i, type.n)) != bar(u(i), type.n))
      return false;
    if (u(i) > type.n)
      ++bars;
  }
  return type.family != Family::D || bars % 2 == 0;
}

SignedPermutation simple_reflection(const RSType& type, int i)
{
  if (i < 1 || i > type.rank())
    throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range for " +
                            type.name());
  const int n = type.n;
  auto img = SignedPermutation::identity(type.ground_size()).images();
  auto swap = [&](int a, int b) {
    std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]);
  };
  if (i < n) {
    swap(i, i + 1);
    if (type.has_bars())
      swap(bar(i, n), bar(i + 1, n));
  } else if (type.family == Family::D) {
    swap(n - 1, bar(n, n));
    swap(bar(n - 1, n), n);
  } else {
    swap(n, bar(n, n));
  }
  return SignedPermutation(std::move(img));
}

BudgetExceeded::BudgetExceeded(std::uint64_t order, std::uint64_t budget)
    : std::runtime_error("group of order " + std::to_string(order) + " exceeds enumeration budget " +
                         std::to_string(budget)),
      order_(order)
{
}

std::uint64_t group_order(const RSType& type)
{
  std::uint64_t f = 1;
  for (int i = 2; i <= type.n; ++i)
    f *= static_cast<std::uint64_t>(i);
  switch (type.family) {
  case Family::A: return f;
  case Family::B:
  case Family::C: return f << type.n;
  case Family::D: return f << (type.n - 1);
  }
  return f;
}

namespace {

// Depth-first choice of u(1), u(2), ... in increasing order, which yields the
// lexicographic order on image sequences.
class GroupWalker {
public:
  GroupWalker(const RSType& type, const std::function<void(const SignedPermutation&)>& fn)
      : type_(type), fn_(fn), img_(static_cast<std::size_t>(type.ground_size())),
        used_(static_cast<std::size_t>(type.ground_size()) + 1, false)
  {
  }

  void run_block(int first)
  {
    if (!place(1, first))
      return;
    descend(2);
    unplace(1, first);
  }

  void run_all()
  {
    for (int first = 1; first <= type_.ground_size(); ++first)
      run_block(first);
  }

private:
  bool place(int pos, int value)
  {
    const int n = type_.n;
    if (used_[static_cast<std::size_t>(value)])
      return false;
    used_[static_cast<std::size_t>(value)] = true;
    img_[static_cast<std::size_t>(pos - 1)] = value;
    if (type_.has_bars()) {
      if (used_[static_cast<std::size_t>(bar(value, n))]) {
        used_[static_cast<std::size_t>(value)] = false;
        return false;
      }
      used_[static_cast<std::size_t>(bar(value, n))] = true;
      img_[static_cast<std::size_t>(bar(pos, n) - 1)] = bar(value, n);
    }
    return true;
  }

  void unplace(int /*pos*/, int value)
  {
    used_[static_cast<std::size_t>(value)] = false;
    if (type_.has_bars())
      used_[static_cast<std::size_t>(bar(value, type_.n))] = false;
  }

  void descend(int pos)
  {
    const int n = type_.n;
    if (pos > n) {
      if (type_.family == Family::D) {
        int bars = 0;
        for (int i = 0; i < n; ++i)
          bars += img_[static_cast<std::size_t>(i)] > n;
        if (bars % 2)
          return;
      }
      fn_(SignedPermutation(img_));
      return;
    }
    for (int v = 1; v <= type_.ground_size(); ++v) {
      if (!place(pos, v))
        continue;
      descend(pos + 1);
      unplace(pos, v);
    }
  }

  const RSType& type_;
  const std::function<void(const SignedPermutation&)>& fn_;
  std::vector<int> img_;
  std::vector<bool> used_;
};

} // namespace

void for_each_group_element(const RSType& type, const std::function<void(const SignedPermutation&)>& fn,
                            std::uint64_t budget)
{
  const auto order = group_order(type);
  if (order > budget)
    throw BudgetExceeded(order, budget);
  GroupWalker(type, fn).run_all();
}

void for_each_group_element_in_block(const RSType& type, int first,
                                     const std::function<void(const SignedPermutation&)>& fn)
{
  if (first < 1 || first > type.ground_size())
    throw std::out_of_range("block index out of range");
  GroupWalker(type, fn).run_block(first);
}

std::vector<SignedPermutation> enumerate_group(const RSType& type, std::uint64_t budget)
{
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(group_order(type), budget)));
  for_each_group_element(type, [&](const SignedPermutation& u) { out.push_back(u); }, budget);
  return out;
}

bool ParabolicK::contains(int k) const
{
  return std::binary_search(K.begin(), K.end(), k);
}

std::string ParabolicK::k_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(K[i]);
  }
  return out + "}";
}

ParabolicK make_parabolic(const RSType& type, std::vector<int> K)
{
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  for (int k : K) {
    if (k < 1 || k > type.rank())
      throw std::invalid_argument("K element " + std::to_string(k) + " outside [1," +
                                  std::to_string(type.rank()) + "] for " + type.name());
  }
  return ParabolicK{type, std::move(K)};
}

std::vector<ParabolicK> all_parabolics(const RSType& type)
{
  std::vector<ParabolicK> out;
  const int r = type.rank();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> K;
    for (int k = 1; k <= r; ++k) {
      if (mask & (1u << (k - 1)))
        K.push_back(k);
    }
    out.push_back(ParabolicK{type, std::move(K)});
  }
  return out;
}

std::vector<SignedPermutation> enumerate_parabolic(const ParabolicK& pk, std::uint64_t budget)
{
  std::vector<SignedPermutation> gens;
  for (int k : pk.K)
    gens.push_back(simple_reflection(pk.type, k));
  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> queue;
  auto id = SignedPermutation::identity(pk.type.ground_size());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto v = g * u;
      if (seen.insert(v).second) {
        if (seen.size() > budget)
          throw BudgetExceeded(seen.size(), budget);
        queue.push_back(std::move(v));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(OrbitKind kind)
{
  switch (kind) {
  case OrbitKind::Plain: return "plain";
  case OrbitKind::Unbarred: return "unbarred";
  case OrbitKind::Barred: return "barred";
  case OrbitKind::Twisted: return "twisted";
  case OrbitKind::TwistedBar: return "twisted-bar";
  case OrbitKind::SelfConjugate: return "self-conjugate";
  }
  return "?";
}

const OrbitPart& OrbitDecomposition::part_of(int e) const
{
  for (const auto& p : parts) {
    if (p.elements.contains(e))
      return p;
  }
  throw std::out_of_range("element " + std::to_string(e) + " not in any orbit");
}

OrbitDecomposition orbit_decomposition(const ParabolicK& pk)
{
  const int m = pk.type.ground_size();
  const int n = pk.type.n;
  std::vector<int> parent(static_cast<std::size_t>(m) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int k : pk.K) {
    auto s = simple_reflection(pk.type, k);
    for (int i = 1; i <= m; ++i) {
      int a = find(i), b = find(s(i));
      if (a != b)
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<Subset> by_root(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i)
    by_root[static_cast<std::size_t>(find(i))].insert(i);

  OrbitDecomposition dec;
  const Subset unbarred = Subset::interval(1, n);
  for (int root = 1; root <= m; ++root) {
    Subset orbit = by_root[static_cast<std::size_t>(root)];
    if (orbit.empty())
      continue;
    OrbitKind kind = OrbitKind::Plain;
    if (pk.type.has_bars()) {
      if (overline(orbit, n) == orbit)
        kind = OrbitKind::SelfConjugate;
      else if (orbit.subset_of(unbarred))
        kind = OrbitKind::Unbarred;
      else if ((orbit & unbarred).empty())
        kind = OrbitKind::Barred;
      else
        kind = orbit.contains(n - 1) ? OrbitKind::Twisted : OrbitKind::TwistedBar;
    }
    dec.parts.push_back({orbit, kind});
  }
  return dec;
}

Subset act_on_subset(const SignedPermutation& u, Subset s)
{
  Subset out;
  for (std::uint32_t b = s.bits; b; b &= b - 1)
    out.insert(u(__builtin_ctz(b) + 1));
  return out;
}

RVec act_on_vector(const SignedPermutation& u, const RVec& v, const RSType& type)
{
  const int n = type.n;
  RVec out(v.size());
  for (int i = 1; i <= n; ++i) {
    const auto& c = v[static_cast<std::size_t>(i - 1)];
    if (c == 0)
      continue;
    const int img = u(i);
    if (img <= n)
      out[static_cast<std::size_t>(img - 1)] += c;
    else
      out[static_cast<std::size_t>(bar(img, n) - 1)] -= c;
  }
  return out;
}

SubsetOrbit subset_orbit_and_stabilizer(const std::vector<SignedPermutation>& group, Subset s)
{
  std::set<Subset> orbit;
  SubsetOrbit out;
  for (const auto& u : group) {
    Subset img = act_on_subset(u, s);
    orbit.insert(img);
    if (img == s)
      ++out.stabilizer_size;
  }
  out.orbit.assign(orbit.begin(), orbit.end());
  return out;
}

SubsetOrbit subset_orbit_and_stabilizer(const ParabolicK& pk, Subset s)
{
  return subset_orbit_and_stabilizer(enumerate_parabolic(pk), s);
}

} // namespace pwpoly
