#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pwpoly/facetcomb.hpp"
#include "pwpoly/polynomial.hpp"

namespace pwpoly {

/// Face numbers f_0..f_dim; f_dim = 1 counts the polytope itself, the empty
/// face is not counted.
struct FVector {
  std::vector<std::uint64_t> f;

  int dim() const { return static_cast<int>(f.size()) - 1; }
  /// Σ (-1)^i f_i.
  std::int64_t euler_characteristic() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Raised when the facet graph's largest clique does not match the dimension,
/// i.e. the face structure is not that of a simple flag polytope.
class NonSimpleStructure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Number of d-vertex cliques (d = 0 gives 1).
std::uint64_t count_cliques(const IntersectionGraph& graph, int d, unsigned workers = 1);

/// counts[d] = number of d-vertex cliques for d = 0..max_size; cliques larger
/// than max_size are reported through `larger_found`.
std::vector<std::uint64_t> clique_counts(const IntersectionGraph& graph, int max_size, unsigned workers = 1,
                                         bool* larger_found = nullptr);

/// Calls fn(indices) on every nonempty clique with at most max_size vertices.
void for_each_clique(const IntersectionGraph& graph, int max_size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

/// Dimension of P_W(K): rank of the root system.
inline int polytope_dimension(const RSType& type) { return type.rank(); }

FVector f_vector(const ParabolicK& pk, unsigned workers = 1);
FVector f_vector_of_graph(const IntersectionGraph& graph, int dim, unsigned workers = 1);

/// h(t) = f(t - 1).
GradedIntPolynomial h_from_f(const FVector& f);

GradedIntPolynomial h_polynomial_faces(const ParabolicK& pk, unsigned workers = 1);

} // namespace pwpoly
