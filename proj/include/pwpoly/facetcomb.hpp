#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pwpoly/rootsys.hpp"
#include "pwpoly/weyl.hpp"

namespace pwpoly {

/// Facet of P_W(K): either F_K(I) for a subset I, or the hyperplane facet H_K(k).
struct FacetLabel {
  enum class Kind { Subset, Hyperplane };

  Kind kind = Kind::Subset;
  pwpoly::Subset subset;  // meaningful for Kind::Subset
  int k = 0;              // meaningful for Kind::Hyperplane

  static FacetLabel of_subset(pwpoly::Subset s) { return {Kind::Subset, s, 0}; }
  static FacetLabel of_hyperplane(int k) { return {Kind::Hyperplane, {}, k}; }

  bool is_subset() const { return kind == Kind::Subset; }
  bool is_hyperplane() const { return kind == Kind::Hyperplane; }

  /// Subsets (canonical subset order) before hyperplanes (ascending k).
  friend std::strong_ordering operator<=>(const FacetLabel& a, const FacetLabel& b)
  {
    if (a.kind != b.kind)
      return a.kind == Kind::Subset ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.kind == Kind::Subset)
      return a.subset <=> b.subset;
    return a.k <=> b.k;
  }
  friend bool operator==(const FacetLabel&, const FacetLabel&) = default;
};

/// "F{1,2}" or "H1".
std::string to_string(const FacetLabel& label, const RSType& type);

/// The facet index family of the full weight polytope, in canonical subset order:
/// A: nonempty proper subsets of [n]; B/C: nonempty signed subsets; D: signed
/// subsets with |I| ≠ n-1.
std::vector<Subset> base_family(const RSType& type);

/// Nonempty with at most one of each pair {i, ī}.
bool is_signed(Subset s, int n);

/// Component order used by the lower-subset test: numeric order on the
/// encoding, except that n and n̄ are incomparable in type D.
bool precedes(int x, int y, const RSType& type);

bool is_lower(Subset I, const ParabolicK& pk);
bool is_lower(Subset I, const ParabolicK& pk, const OrbitDecomposition& dec);

struct FacetFamily {
  ParabolicK pk;
  std::vector<FacetLabel> labels;  // subset labels, then hyperplane labels

  std::size_t subset_count() const;
};

FacetFamily facet_family(const ParabolicK& pk);

/// Whether the facets F(I), F(J) of the full polytope meet.
bool subsets_intersect(Subset I, Subset J, const RSType& type);

bool subset_is_sk_invariant(Subset I, int k, const RSType& type);

/// Whether F(I) lies in the open half-space α_k^∨ < 0.
bool subset_in_open_halfspace(Subset I, int k, const RSType& type);

/// Inward normal e_I = Σ_{i∈I} e_i (with e_ī = -e_i), in E* coordinates.
RVec subset_normal(Subset I, const RSType& type);

/// Symmetric adjacency over a label list, one bit row per vertex.
class IntersectionGraph {
public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::vector<FacetLabel> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<FacetLabel>& labels() const { return labels_; }
  const FacetLabel& label(std::size_t i) const { return labels_[i]; }

  /// Index of a label; throws std::out_of_range if absent.
  std::size_t index_of(const FacetLabel& label) const;
  bool has_label(const FacetLabel& label) const;

  bool adjacent(std::size_t i, std::size_t j) const { return (rows_[i][j / 64] >> (j % 64)) & 1u; }
  void set_adjacent(std::size_t i, std::size_t j, bool value);

  const std::vector<std::uint64_t>& row(std::size_t i) const { return rows_[i]; }
  std::size_t words() const { return words_; }

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

private:
  std::vector<FacetLabel> labels_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

IntersectionGraph intersection_graph(const ParabolicK& pk);

/// Facet graph of the full weight polytope (the K = ∅ case).
IntersectionGraph full_intersection_graph(const RSType& type);

} // namespace pwpoly
