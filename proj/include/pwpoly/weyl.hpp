#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwpoly/rational.hpp"
#include "pwpoly/rootsys.hpp"

namespace pwpoly {

// Ground set [n] ⊔ [n̄] encoded as 1..2n with ī = 2n+1-i; type A uses 1..n.

inline int bar(int i, int n) { return 2 * n + 1 - i; }

/// Subset of the ground set as a bit mask; element e occupies bit e-1.
struct Subset {
  std::uint32_t bits = 0;

  static Subset of(std::initializer_list<int> elems);
  static Subset interval(int lo, int hi);  // {lo, ..., hi}

  bool contains(int e) const { return (bits >> (e - 1)) & 1u; }
  void insert(int e) { bits |= 1u << (e - 1); }
  void erase(int e) { bits &= ~(1u << (e - 1)); }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  std::vector<int> elements() const;

  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  Subset operator&(Subset o) const { return {bits & o.bits}; }
  Subset operator|(Subset o) const { return {bits | o.bits}; }
  Subset minus(Subset o) const { return {bits & ~o.bits}; }

  /// Canonical order: by size, then by mask value.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b)
  {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return a.bits <=> b.bits;
  }
  friend bool operator==(const Subset&, const Subset&) = default;
};

/// {ī : i ∈ s}.
Subset overline(Subset s, int n);

/// "{1,2,-3}" with -i standing for ī.
std::string to_string(Subset s, const RSType& type);

/// Number of barred elements in s.
int bar_count(Subset s, int n);

/// A (signed) permutation of the ground set, stored as its one-line images.
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int size);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  SignedPermutation inverse() const;

  /// One-line notation of the first n images; type A "3412", signed "-2-31".
  std::string one_line(const RSType& type) const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
  std::vector<int> images_;
};

/// True iff u is an element of W for the given type (bijective, respects bars,
/// even sign count in type D).
bool is_group_element(const SignedPermutation& u, const RSType& type);

SignedPermutation simple_reflection(const RSType& type, int i);

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t order, std::uint64_t budget);
  std::uint64_t order() const { return order_; }

private:
  std::uint64_t order_;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// |W|: n! for A, 2^n n! for B/C, 2^(n-1) n! for D.
std::uint64_t group_order(const RSType& type);

/// Calls fn on each element of W once, in lexicographic order of the image
/// sequence. Throws BudgetExceeded if |W| > budget.
void for_each_group_element(const RSType& type, const std::function<void(const SignedPermutation&)>& fn,
                            std::uint64_t budget = kDefaultBudget);

/// Same stream restricted to the elements with u(1) = first. Blocks for
/// first = 1..ground_size() partition W and concatenate to the full stream.
void for_each_group_element_in_block(const RSType& type, int first,
                                     const std::function<void(const SignedPermutation&)>& fn);

std::vector<SignedPermutation> enumerate_group(const RSType& type, std::uint64_t budget = kDefaultBudget);

/// A type together with a subset K of the simple-root indices [rank].
struct ParabolicK {
  RSType type;
  std::vector<int> K;  // sorted, 1-based

  bool contains(int k) const;
  std::string k_string() const;  // "{1,2,4}"
};

/// Validated constructor: sorts and dedups K, checks K ⊆ [rank].
ParabolicK make_parabolic(const RSType& type, std::vector<int> K);

/// All 2^rank choices of K, in order of the K mask.
std::vector<ParabolicK> all_parabolics(const RSType& type);

/// Elements of W_K, by breadth-first closure over the generators, sorted
/// lexicographically. Throws BudgetExceeded once the closure outgrows budget.
std::vector<SignedPermutation> enumerate_parabolic(const ParabolicK& pk, std::uint64_t budget = kDefaultBudget);

enum class OrbitKind {
  Plain,          // type A orbit
  Unbarred,       // N_i ⊂ [n]
  Barred,         // overline(N_i)
  Twisted,        // D only: N' ∋ n-1, n̄
  TwistedBar,     // D only: overline(N')
  SelfConjugate,  // N = overline(N): B's N' (n ∈ K), D's N'' ({n-1,n} ⊆ K)
};

std::string to_string(OrbitKind kind);

struct OrbitPart {
  Subset elements;
  OrbitKind kind;
};

/// W_K-orbits of the ground set, ordered by smallest element.
struct OrbitDecomposition {
  std::vector<OrbitPart> parts;

  /// The part containing element e.
  const OrbitPart& part_of(int e) const;
};

OrbitDecomposition orbit_decomposition(const ParabolicK& pk);

Subset act_on_subset(const SignedPermutation& u, Subset s);

/// Action on E or E* coordinates: t_i ↦ t_{u(i)} with t_{ī} = -t_i.
RVec act_on_vector(const SignedPermutation& u, const RVec& v, const RSType& type);

struct SubsetOrbit {
  std::vector<Subset> orbit;  // canonical order
  std::uint64_t stabilizer_size = 0;
};

SubsetOrbit subset_orbit_and_stabilizer(const std::vector<SignedPermutation>& group, Subset s);
SubsetOrbit subset_orbit_and_stabilizer(const ParabolicK& pk, Subset s);

} // namespace pwpoly
