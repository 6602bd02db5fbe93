#include "pwpoly/facetcomb.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwpoly {

std::string to_string(const FacetLabel& label, const RSType& type)
{
  if (label.is_hyperplane())
    return "H" + std::to_string(label.k);
  return "F" + to_string(label.subset, type);
}

bool is_signed(Subset s, int n)
{
  if (s.empty())
    return false;
  return (s & overline(s, n)).empty();
}

std::vector<Subset> base_family(const RSType& type)
{
  std::vector<Subset> out;
  const int n = type.n;
  if (type.family == Family::A) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask)
      out.push_back(Subset{static_cast<std::uint32_t>(mask)});
  } else {
    // Each i ∈ [n] is absent, present, or present as ī.
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < digit.size() && digit[pos] == 2)
        digit[pos++] = 0;
      if (pos == digit.size())
        break;
      ++digit[pos];
      Subset s;
      for (int i = 1; i <= n; ++i) {
        const int d = digit[static_cast<std::size_t>(i - 1)];
        if (d == 1)
          s.insert(i);
        else if (d == 2)
          s.insert(bar(i, n));
      }
      if (type.family != Family::D || s.size() != n - 1)
        out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool precedes(int x, int y, const RSType& type)
{
  if (type.family == Family::D) {
    const int n = type.n;
    if ((x == n && y == n + 1) || (x == n + 1 && y == n))
      return false;
  }
  return x < y;
}

bool is_lower(Subset I, const ParabolicK& pk, const OrbitDecomposition& dec)
{
  for (const auto& part : dec.parts) {
    const Subset M = I & part.elements;
    for (int x : M.elements()) {
      for (int y : part.elements.elements()) {
        if (precedes(y, x, pk.type) && !M.contains(y))
          return false;
      }
    }
  }
  return true;
}

bool is_lower(Subset I, const ParabolicK& pk)
{
  return is_lower(I, pk, orbit_decomposition(pk));
}

std::size_t FacetFamily::subset_count() const
{
  return static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](const FacetLabel& l) { return l.is_subset(); }));
}

FacetFamily facet_family(const ParabolicK& pk)
{
  FacetFamily fam{pk, {}};
  const auto dec = orbit_decomposition(pk);
  for (Subset I : base_family(pk.type)) {
    if (is_lower(I, pk, dec))
      fam.labels.push_back(FacetLabel::of_subset(I));
  }
  for (int k : pk.K)
    fam.labels.push_back(FacetLabel::of_hyperplane(k));
  return fam;
}

bool subsets_intersect(Subset I, Subset J, const RSType& type)
{
  if (I.subset_of(J) || J.subset_of(I))
    return true;
  if (type.family != Family::D)
    return false;
  return (I & J).size() > type.n - 2;
}

bool subset_is_sk_invariant(Subset I, int k, const RSType& type)
{
  return act_on_subset(simple_reflection(type, k), I) == I;
}

bool subset_in_open_halfspace(Subset I, int k, const RSType& type)
{
  if (k < 1 || k > type.rank())
    throw std::out_of_range("hyperplane index " + std::to_string(k) + " out of range for " + type.name());
  const int n = type.n;
  auto in = [&](int e) { return I.contains(e); };
  if (type.family == Family::A)
    return in(k) && !in(k + 1);
  if (k < n)
    return (in(k) && !in(k + 1)) || (in(bar(k + 1, n)) && !in(bar(k, n)));
  if (type.family == Family::D)
    return (in(n) && !in(bar(n - 1, n))) || (in(n - 1) && !in(bar(n, n)));
  return in(n) && !in(bar(n, n));
}

RVec subset_normal(Subset I, const RSType& type)
{
  const int n = type.n;
  RVec v(static_cast<std::size_t>(n));
  for (int e : I.elements()) {
    if (e <= n)
      v[static_cast<std::size_t>(e - 1)] += 1;
    else
      v[static_cast<std::size_t>(bar(e, n) - 1)] -= 1;
  }
  return v;
}

IntersectionGraph::IntersectionGraph(std::vector<FacetLabel> labels)
    : labels_(std::move(labels)), words_((labels_.size() + 63) / 64),
      rows_(labels_.size(), std::vector<std::uint64_t>(words_, 0))
{
}

std::size_t IntersectionGraph::index_of(const FacetLabel& label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::out_of_range("label not in graph");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool IntersectionGraph::has_label(const FacetLabel& label) const
{
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

void IntersectionGraph::set_adjacent(std::size_t i, std::size_t j, bool value)
{
  const std::uint64_t bit_j = std::uint64_t{1} << (j % 64);
  const std::uint64_t bit_i = std::uint64_t{1} << (i % 64);
  if (value) {
    rows_[i][j / 64] |= bit_j;
    rows_[j][i / 64] |= bit_i;
  } else {
    rows_[i][j / 64] &= ~bit_j;
    rows_[j][i / 64] &= ~bit_i;
  }
}

namespace {

bool labels_adjacent(const FacetLabel& a, const FacetLabel& b, const RSType& type)
{
  if (a.is_subset() && b.is_subset())
    return subsets_intersect(a.subset, b.subset, type);
  if (a.is_hyperplane() && b.is_hyperplane())
    return true;
  const FacetLabel& s = a.is_subset() ? a : b;
  const FacetLabel& h = a.is_subset() ? b : a;
  return subset_is_sk_invariant(s.subset, h.k, type);
}

IntersectionGraph build_graph(std::vector<FacetLabel> labels, const RSType& type)
{
  IntersectionGraph g(std::move(labels));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (labels_adjacent(g.label(i), g.label(j), type))
        g.set_adjacent(i, j, true);
    }
  }
  return g;
}

} // namespace

IntersectionGraph intersection_graph(const ParabolicK& pk)
{
  return build_graph(facet_family(pk).labels, pk.type);
}

IntersectionGraph full_intersection_graph(const RSType& type)
{
  std::vector<FacetLabel> labels;
  for (Subset I : base_family(type))
    labels.push_back(FacetLabel::of_subset(I));
  return build_graph(std::move(labels), type);
}

} // namespace pwpoly
