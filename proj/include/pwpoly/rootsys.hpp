#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwpoly/linalg.hpp"
#include "pwpoly/rational.hpp"

namespace pwpoly {

enum class Family { A, B, C, D };

/// A classical root system at fixed size. `n` is the number of coordinates:
/// type A has rank n-1, types B, C, D have rank n.
struct RSType {
  Family family = Family::A;
  int n = 2;

  int rank() const { return family == Family::A ? n - 1 : n; }
  /// Size of the ground set the Weyl group permutes: n for A, 2n otherwise.
  int ground_size() const { return family == Family::A ? n : 2 * n; }
  bool has_bars() const { return family != Family::A; }

  /// "A_{n-1}", "B_n", ...
  std::string name() const;

  friend bool operator==(const RSType&, const RSType&) = default;
};

/// Validated constructor. Throws std::invalid_argument for n < 2 or n > 16
/// (subsets are 32-bit masks over the 2n-element ground set).
RSType make_rstype(Family family, int n);

Family parse_family(const std::string& letter);
char family_letter(Family f);

/// Simple roots, coroots and fundamental coweights of a classical root system.
///
/// Vectors of E are stored in the basis t_1..t_n; functionals on E in the dual
/// basis e_1..e_n. For types B, C, D only the first n of the 2n mirror
/// coordinates are kept (x_{\bar i} = -x_i). Type A functionals are defined
/// modulo e_1 + ... + e_n and are normalized to coordinate sum zero.
struct RootSystem {
  RSType type;
  std::vector<RVec> simple_roots;         // alpha_1..alpha_r in E
  std::vector<RVec> coroots;              // alpha_1^v..alpha_r^v in E*
  std::vector<RVec> fundamental_coweights;  // omega_1..omega_r in E*, <alpha_i, omega_j> = delta_ij
  std::vector<RVec> fundamental_weights;  // varpi_1..varpi_r in E, <varpi_i, alpha_j^v> = delta_ij
  std::vector<RVec> positive_roots;       // sorted

  int rank() const { return type.rank(); }

  bool is_positive_root(const RVec& v) const;
  bool is_root(const RVec& v) const;
  /// True iff v = -alpha_i for some simple root.
  bool is_negative_simple_root(const RVec& v) const;
};

RootSystem build_root_system(RSType type);

/// Natural pairing between E and E*.
Rational pairing(const RVec& x, const RVec& f);

/// Representative of a functional in E*: identity for B/C/D, shifted to
/// coordinate sum zero for type A.
RVec normalize_dual(const RSType& type, RVec f);

/// Matrix <alpha_i^v, alpha_j> (the Cartan matrix), indexed from 0.
std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs);

/// Matrix <alpha_i, omega_j>; the identity for a correct root system.
Matrix coweight_pairing(const RootSystem& rs);

/// Coefficients c_k with v = sum_{k in ks} c_k alpha_k^v, if v lies in that span.
/// Simple-root indices are 1-based.
std::optional<std::map<int, Rational>> coroot_span_expand(const RVec& v, std::span<const int> ks,
                                                          const RootSystem& rs);

} // namespace pwpoly
