#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pwpoly/polynomial.hpp"
#include "pwpoly/rootsys.hpp"
#include "pwpoly/weyl.hpp"

namespace pwpoly {

/// Thrown when an exact identity that must hold by construction fails
/// (e.g. a character average that is not integral).
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Descent generating function over S_m, via A(m,k) = (k+1)A(m-1,k) + (m-k)A(m-1,k-1).
GradedIntPolynomial eulerian(int m);

/// 1 + t + ... + t^(m-1).
GradedIntPolynomial q_integer(int m);

struct CycleType {
  std::vector<int> lambda;  // weakly decreasing

  int length() const { return static_cast<int>(lambda.size()); }
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Cycle type of w restricted to [n] (type A elements only).
CycleType cycle_type(const SignedPermutation& w, int n);

/// E_l(t) * prod_j [lambda_j]_t for the cycle type of w.
GradedIntPolynomial chi_typeA(const SignedPermutation& w, int n);

/// (1/|W_K|) Σ_{w ∈ W_K} chi(w), checked to divide exactly. Type A only.
GradedIntPolynomial h_via_characters_A(const ParabolicK& pk, unsigned workers = 1,
                                       std::uint64_t budget = kDefaultBudget);

/// w ∈ W(K): w^{-1}(α_k) is a positive root or a negative simple root for all k ∈ K.
bool in_WK_set(const SignedPermutation& w, const ParabolicK& pk, const RootSystem& rs);
bool in_WK_set(const SignedPermutation& w, const ParabolicK& pk);

/// Type A shortcut: w^{-1}(k) - w^{-1}(k+1) ≤ 1 for every k ∈ K.
bool in_WK_set_typeA(const SignedPermutation& w, const ParabolicK& pk);

/// Number of simple roots α_i with w(-α_i) positive.
int d_stat(const SignedPermutation& w, const RootSystem& rs);
int d_stat(const SignedPermutation& w, const RSType& type);

struct WKElementStat {
  SignedPermutation w;
  int d = 0;
};

struct PrecupResult {
  GradedIntPolynomial h;
  std::uint64_t wk_size = 0;
  std::vector<WKElementStat> members;  // lexicographic; filled only on request
};

/// Σ_{w ∈ W(K)} t^{d(w)} over a full sweep of W. Throws BudgetExceeded if |W| > budget.
PrecupResult precup_sweep(const ParabolicK& pk, unsigned workers = 1, std::uint64_t budget = kDefaultBudget,
                          bool collect_members = false);

GradedIntPolynomial h_via_precup(const ParabolicK& pk, unsigned workers = 1,
                                 std::uint64_t budget = kDefaultBudget);

/// All bijections p of simple-root indices (1-based, p[0] unused) with
/// <α_i^∨, α_j> = <β_{p(i)}^∨, β_{p(j)}>, in lexicographic order.
std::vector<std::vector<int>> dynkin_isomorphisms(const RootSystem& from, const RootSystem& to);

/// Image of K under a relabeling from dynkin_isomorphisms.
ParabolicK relabel(const ParabolicK& pk, const RSType& target, const std::vector<int>& p);

} // namespace pwpoly
