#pragma once

#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwpoly/facecount.hpp"
#include "pwpoly/facetcomb.hpp"
#include "pwpoly/rational.hpp"
#include "pwpoly/report.hpp"

namespace pwpoly {

/// normal · x ≥ bound, with x in the coordinates t_1..t_n of E.
struct HalfSpace {
  RVec normal;
  Rational bound;
  FacetLabel tag;  // Subset(I) for base inequalities, Hyperplane(k) for α_k^∨(x) ≤ 0

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// a_1 < ... < a_n; type A sums to zero, types B/C/D have a_n < 0.
struct AnchorPoint {
  RSType type;
  RVec a;
};

class OracleBudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless the values form a valid anchor. Type A
/// values are shifted to mean zero first.
AnchorPoint make_anchor(const RSType& type, RVec values);
AnchorPoint default_anchor(const RSType& type);
/// A second anchor with unequal gaps, for the anchor-independence check.
AnchorPoint second_anchor(const RSType& type);

/// Largest n the oracle accepts: 5 for A, 4 otherwise.
int oracle_max_n(Family family);

/// Σ_{j∈𝓘} a_j, where 𝓘 = [|I|] except 𝓘 = [n-1] ⊔ {n̄} for type D, |I| = n, odd bar count.
Rational facet_bound(Subset I, const AnchorPoint& anchor);

/// Point (a_{u(1)}, ..., a_{u(n)}) with a_ī = -a_i.
RVec orbit_point(const SignedPermutation& u, const AnchorPoint& anchor);

/// One inequality per base-family subset, then one per k ∈ K.
std::vector<HalfSpace> h_representation(const ParabolicK& pk, const AnchorPoint& anchor);

/// Exact vertices, sorted. Every rank-sized set of independent bounding
/// hyperplanes is solved; feasible solutions are kept.
std::vector<RVec> enumerate_vertices(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers = 1);

using TightSet = std::bitset<128>;

/// Face lattice data: vertices, the tight set of each vertex, and every face as
/// the set of half-spaces tight on all of its vertices.
struct GeometricFaces {
  int dim = 0;
  std::vector<RVec> vertices;
  std::vector<TightSet> vertex_tight;
  std::vector<TightSet> faces;     // closed tight sets, polytope included
  std::vector<int> face_dim;
  std::vector<std::size_t> facets;  // indices of facet-defining half-spaces, ascending
};

GeometricFaces geometric_faces(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers = 1);

FVector geometric_f_vector(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers = 1);

/// Facet set, pairwise facet intersections, simpleness, flagness and f-vector
/// against the combinatorial model, under both anchors, plus agreement between them.
std::vector<Check> verify_combinatorics_against_geometry(const ParabolicK& pk, const AnchorPoint& anchor,
                                                         const AnchorPoint& second, unsigned workers = 1);
std::vector<Check> verify_combinatorics_against_geometry(const ParabolicK& pk, unsigned workers = 1);

/// "F{1,-2}" / "H3", as produced by to_string(FacetLabel).
FacetLabel parse_facet_label(const std::string& text, const RSType& type);

nlohmann::json export_geometry(const ParabolicK& pk, const AnchorPoint& anchor, unsigned workers = 1);

struct ImportedGeometry {
  ParabolicK pk;
  AnchorPoint anchor;
  std::vector<HalfSpace> hrep;
  std::vector<RVec> vertices;
};

ImportedGeometry import_geometry(const nlohmann::json& j);

} // namespace pwpoly
