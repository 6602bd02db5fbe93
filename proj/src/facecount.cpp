#include "pwpoly/facecount.hpp"

#include <algorithm>
#include <bit>

#include "pwpoly/parallel.hpp"

namespace pwpoly {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits successors_in(const IntersectionGraph& g, std::size_t v)
{
  Bits out = g.row(v);
  // keep only vertices after v, so each clique is visited once, in index order
  std::size_t w = v / 64;
  for (std::size_t i = 0; i < w; ++i)
    out[i] = 0;
  std::uint64_t keep = (v % 64 == 63) ? 0 : (~std::uint64_t{0} << (v % 64 + 1));
  out[w] &= keep;
  return out;
}

bool none(const Bits& b)
{
  for (auto x : b)
    if (x)
      return false;
  return true;
}

struct CliqueWalk {
  CliqueWalk(const IntersectionGraph& graph, int max, std::vector<std::uint64_t>& out)
      : g(graph), max_size(max), counts(out)
  {
  }

  const IntersectionGraph& g;
  int max_size;
  std::vector<std::uint64_t>& counts;
  bool larger = false;
  std::vector<std::size_t> stack;
  const std::function<void(const std::vector<std::size_t>&)>* visit = nullptr;

  void extend(const Bits& cand)
  {
    int depth = static_cast<int>(stack.size());
    if (depth == max_size) {
      if (!none(cand))
        larger = true;
      return;
    }
    for (std::size_t wi = 0; wi < cand.size(); ++wi) {
      std::uint64_t word = cand[wi];
      while (word) {
        std::size_t u = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        enter(u, cand);
      }
    }
  }

  void enter(std::size_t u, const Bits& cand)
  {
    stack.push_back(u);
    ++counts[stack.size()];
    if (visit)
      (*visit)(stack);
    Bits next = successors_in(g, u);
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] &= cand[i];
    extend(next);
    stack.pop_back();
  }
};

} // namespace

std::int64_t FVector::euler_characteristic() const
{
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(f[i]);
  return s;
}

std::vector<std::uint64_t> clique_counts(const IntersectionGraph& graph, int max_size, unsigned workers,
                                         bool* larger_found)
{
  std::size_t nv = graph.size();
  std::vector<std::vector<std::uint64_t>> partial(nv, std::vector<std::uint64_t>(max_size + 1, 0));
  std::vector<char> larger(nv, 0);
  if (max_size >= 1) {
    parallel_for(nv, workers, [&](std::size_t v) {
      CliqueWalk walk(graph, max_size, partial[v]);
      walk.stack.push_back(v);
      ++partial[v][1];
      Bits next = successors_in(graph, v);
      walk.extend(next);
      larger[v] = walk.larger;
    });
  }
  std::vector<std::uint64_t> counts(max_size + 1, 0);
  counts[0] = 1;
  for (std::size_t v = 0; v < nv; ++v)
    for (int d = 1; d <= max_size; ++d)
      counts[d] += partial[v][d];
  if (larger_found)
    *larger_found = (max_size >= 1) ? std::any_of(larger.begin(), larger.end(), [](char c) { return c; })
                                    : nv > 0;
  return counts;
}

std::uint64_t count_cliques(const IntersectionGraph& graph, int d, unsigned workers)
{
  if (d < 0)
    return 0;
  return clique_counts(graph, d, workers)[d];
}

void for_each_clique(const IntersectionGraph& graph, int max_size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn)
{
  if (max_size < 1)
    return;
  std::vector<std::uint64_t> counts(max_size + 1, 0);
  CliqueWalk walk(graph, max_size, counts);
  walk.visit = &fn;
  Bits all(graph.words(), ~std::uint64_t{0});
  for (std::size_t w = 0; w < all.size(); ++w) {
    std::size_t lo = w * 64;
    if (graph.size() < lo + 64)
      all[w] = graph.size() > lo ? (std::uint64_t{1} << (graph.size() - lo)) - 1 : 0;
  }
  walk.extend(all);
}

FVector f_vector_of_graph(const IntersectionGraph& graph, int dim, unsigned workers)
{
  bool larger = false;
  auto counts = clique_counts(graph, dim, workers, &larger);
  if (larger)
    throw NonSimpleStructure("non-simple structure: facet graph has a clique larger than dim " +
                             std::to_string(dim));
  if (counts[dim] == 0)
    throw NonSimpleStructure("non-simple structure: no clique of size dim " + std::to_string(dim));
  FVector out;
  out.f.assign(dim + 1, 0);
  for (int d = 0; d <= dim; ++d)
    out.f[dim - d] = counts[d];
  return out;
}

FVector f_vector(const ParabolicK& pk, unsigned workers)
{
  return f_vector_of_graph(intersection_graph(pk), polytope_dimension(pk.type), workers);
}

GradedIntPolynomial h_from_f(const FVector& f)
{
  // Σ f_i (t-1)^i
  GradedIntPolynomial h;
  GradedIntPolynomial power{1};
  const GradedIntPolynomial t_minus_1{-1, 1};
  for (std::size_t i = 0; i < f.f.size(); ++i) {
    h += power * BigInt(static_cast<unsigned long long>(f.f[i]));
    power = power * t_minus_1;
  }
  return h;
}

GradedIntPolynomial h_polynomial_faces(const ParabolicK& pk, unsigned workers)
{
  return h_from_f(f_vector(pk, workers));
}

} // namespace pwpoly
