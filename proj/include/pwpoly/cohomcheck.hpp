#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pwpoly/facetcomb.hpp"
#include "pwpoly/linalg.hpp"
#include "pwpoly/rootsys.hpp"
#include "pwpoly/weyl.hpp"

namespace pwpoly {

/// An identity that the theory guarantees failed at a concrete instance.
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Product of generators; factors are (generator index, exponent ≥ 1), sorted by index.
struct Monomial {
  std::vector<std::pair<std::size_t, int>> factors;

  static Monomial one() { return {}; }
  static Monomial generator(std::size_t g, int exponent = 1);

  int degree() const;
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite Q-linear combination of monomials; zero coefficients are never stored.
class MonomialCombination {
public:
  MonomialCombination() = default;
  static MonomialCombination of(const Monomial& m, const Rational& c = 1);

  void add(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  MonomialCombination& operator+=(const MonomialCombination& o);
  friend MonomialCombination operator+(MonomialCombination a, const MonomialCombination& b) { return a += b; }
  friend MonomialCombination operator-(MonomialCombination a, const MonomialCombination& b);
  friend MonomialCombination operator*(const MonomialCombination& a, const MonomialCombination& b);
  friend MonomialCombination operator*(const Rational& s, const MonomialCombination& a);
  friend bool operator==(const MonomialCombination&, const MonomialCombination&) = default;

private:
  std::map<Monomial, Rational> terms_;
};

/// Generators τ_F, one per facet, with the linear and monomial relations of the
/// cohomology ring of the associated toric variety.
struct Presentation {
  ParabolicK pk;
  std::vector<FacetLabel> generators;
  IntersectionGraph graph;
  std::vector<RVec> normals;                                  // inward normal per generator, in E*
  std::vector<std::pair<std::size_t, std::size_t>> nonface_pairs;  // i < j, non-adjacent
  Matrix linear_relation_matrix;  // row u = α_j, column g: <u, normal(g)>

  const RSType& type() const { return pk.type; }
  std::size_t index_of(const FacetLabel& label) const { return graph.index_of(label); }
  std::size_t index_of(Subset s) const { return graph.index_of(FacetLabel::of_subset(s)); }

  /// Whether the support of m is a clique (a face, by flagness).
  bool is_face(const Monomial& m) const;

  /// Linear form Σ_g <u, normal(g)> τ_g.
  MonomialCombination linear_form(const RVec& u) const;

  /// Coordinates of a degree-1 combination over the generators.
  RVec degree_one_vector(const MonomialCombination& x) const;

  std::string to_string(const Monomial& m) const;
  std::string to_string(const MonomialCombination& x) const;
};

Presentation presentation_full(const RSType& type);
Presentation presentation_partitioned(const ParabolicK& pk);

/// Drops every term whose support is not a face.
MonomialCombination reduce_by_nonfaces(const MonomialCombination& x, const Presentation& p);

/// Σ τ_{w(I)}^exponent over the distinct images w(I), w ∈ group; p is a full presentation.
MonomialCombination orbit_sum(Subset I, const std::vector<SignedPermutation>& group, const Presentation& p,
                              int exponent = 1);
MonomialCombination orbit_sum(Subset I, const ParabolicK& pk);

/// Sum of the distinct monomials Π τ_{w(I_i)}^{m_i}, w ∈ group.
MonomialCombination chain_orbit_sum(const std::vector<Subset>& chain, const std::vector<int>& m,
                                    const std::vector<SignedPermutation>& group, const Presentation& p);

struct OrbitProductComparison {
  bool equal = false;
  MonomialCombination direct;   // orbit sum of the chain monomial
  MonomialCombination product;  // Π orbit_sum(I_i)^{m_i}, reduced by nonfaces
};

OrbitProductComparison compare_orbit_product(const std::vector<Subset>& chain, const std::vector<int>& m,
                                             const std::vector<SignedPermutation>& group, const Presentation& p);

/// The orbit-sum product identity for a strictly nested chain under W_K.
bool verify_orbit_product(const ParabolicK& pk, const std::vector<Subset>& chain, const std::vector<int>& m);

/// Even permutations of [n] (type A only), as a stand-in for a non-parabolic subgroup.
std::vector<SignedPermutation> alternating_subgroup(const RSType& type);

/// c_k with e_I - e_{v(I)} = Σ_{k∈K} c_k α_k^∨. Throws InvariantViolation if the
/// difference is outside the coroot span or some c_k is not a nonnegative integer.
std::map<int, BigInt> c_coefficients(Subset I, const SignedPermutation& v, const ParabolicK& pk,
                                     const RootSystem& rs);
std::map<int, BigInt> c_coefficients(Subset I, const SignedPermutation& v, const ParabolicK& pk);

/// Hypothesis under which c_k^{I,v} must vanish; depends on v(I) only.
bool c_vanishing_hypothesis(Subset vI, int k, const ParabolicK& pk, const OrbitDecomposition& dec);

/// Outcome of one verification suite on one (type, K).
struct SuiteReport {
  std::string suite;
  std::string instance;  // "A_3 K={1,2}"
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, std::string>> stats;

  bool pass() const { return violations.empty(); }
  std::string summary() const;
};

/// Every strictly nested chain of base-family subsets of length ≤ max_length,
/// with exponents in 1..max_exponent.
SuiteReport sweep_orbit_product(const ParabolicK& pk, int max_length = 3, int max_exponent = 2);

/// Nonnegativity and integrality of every c_k^{I,v}, I ∈ 𝔉(K), v ∈ W_K.
SuiteReport verify_c_coefficients(const ParabolicK& pk);

/// Nonnegativity and integrality of every c_k^{I,v}, and c_k^{I,v} = 0 whenever
/// the vanishing hypothesis holds.
SuiteReport verify_c_vanishing(const ParabolicK& pk);

/// φ from generators of the partitioned presentation into combinations over the
/// full presentation. Images are computed once.
class PhiMap {
public:
  explicit PhiMap(const ParabolicK& pk);

  const Presentation& full() const { return full_; }
  const Presentation& partitioned() const { return part_; }
  const RootSystem& roots() const { return rs_; }
  const std::vector<SignedPermutation>& group() const { return group_; }

  const MonomialCombination& image(std::size_t generator) const { return images_.at(generator); }
  const MonomialCombination& image(const FacetLabel& g) const { return image(part_.index_of(g)); }

private:
  ParabolicK pk_;
  RootSystem rs_;
  Presentation full_;
  Presentation part_;
  std::vector<SignedPermutation> group_;
  std::vector<MonomialCombination> images_;
};

MonomialCombination phi_of_generator(const FacetLabel& g, const ParabolicK& pk);

/// Degree-2 part of the full ideal, restricted to face monomials.
class DegreeTwoIdeal {
public:
  explicit DegreeTwoIdeal(const Presentation& full);

  /// Whether a combination of degree-2 monomials lies in the ideal.
  bool contains(const MonomialCombination& x) const;
  std::size_t face_monomials() const { return columns_.size(); }

private:
  Presentation full_;
  std::map<Monomial, std::size_t> columns_;
  RowEchelon echelon_;
};

/// φ kills the linear relations (exactly, modulo the full linear ideal) and the
/// monomial relations (modulo the full degree-2 ideal; literal zeros are counted).
SuiteReport verify_phi_kernel(const PhiMap& phi);
SuiteReport verify_phi_kernel(const ParabolicK& pk);

/// H² of the full variety as a quotient space: the W_K-fixed subspace is spanned
/// by the φ-images, its dimension is h_1, and φ(τ_{s_k}) agrees with the
/// fundamental-weight expression.
SuiteReport verify_deg2_surjectivity(const PhiMap& phi, std::optional<std::int64_t> expected_h1 = std::nullopt);
SuiteReport verify_deg2_surjectivity(const ParabolicK& pk);

/// "A_3 K={1,2}".
std::string instance_name(const ParabolicK& pk);

} // namespace pwpoly
