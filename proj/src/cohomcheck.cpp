#include "pwpoly/cohomcheck.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "pwpoly/facecount.hpp"

namespace pwpoly {

// ---- monomials -------------------------------------------------------------

Monomial Monomial::generator(std::size_t g, int exponent)
{
  Monomial m;
  if (exponent > 0)
    m.factors.push_back({g, exponent});
  return m;
}

int Monomial::degree() const
{
  int d = 0;
  for (const auto& f : factors)
    d += f.second;
  return d;
}

std::vector<std::size_t> Monomial::support() const
{
  std::vector<std::size_t> out;
  for (const auto& f : factors)
    out.push_back(f.first);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
  Monomial out;
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
      out.factors.push_back(*i++);
    } else if (i == a.factors.end() || j->first < i->first) {
      out.factors.push_back(*j++);
    } else {
      out.factors.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  return out;
}

MonomialCombination MonomialCombination::of(const Monomial& m, const Rational& c)
{
  MonomialCombination x;
  x.add(m, c);
  return x;
}

void MonomialCombination::add(const Monomial& m, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational MonomialCombination::coeff(const Monomial& m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MonomialCombination& MonomialCombination::operator+=(const MonomialCombination& o)
{
  for (const auto& [m, c] : o.terms_)
    add(m, c);
  return *this;
}

MonomialCombination operator-(MonomialCombination a, const MonomialCombination& b)
{
  for (const auto& [m, c] : b.terms_)
    a.add(m, -c);
  return a;
}

MonomialCombination operator*(const MonomialCombination& a, const MonomialCombination& b)
{
  MonomialCombination out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add(ma * mb, ca * cb);
  return out;
}

MonomialCombination operator*(const Rational& s, const MonomialCombination& a)
{
  MonomialCombination out;
  for (const auto& [m, c] : a.terms_)
    out.add(m, s * c);
  return out;
}

// ---- presentations ---------------------------------------------------------

bool Presentation::is_face(const Monomial& m) const
{
  for (std::size_t i = 0; i < m.factors.size(); ++i)
    for (std::size_t j = i + 1; j < m.factors.size(); ++j)
      if (!graph.adjacent(m.factors[i].first, m.factors[j].first))
        return false;
  return true;
}

MonomialCombination Presentation::linear_form(const RVec& u) const
{
  MonomialCombination x;
  for (std::size_t g = 0; g < generators.size(); ++g)
    x.add(Monomial::generator(g), pairing(u, normals[g]));
  return x;
}

RVec Presentation::degree_one_vector(const MonomialCombination& x) const
{
  RVec v(generators.size());
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() != 1)
      throw std::invalid_argument("degree_one_vector: term of degree " + std::to_string(m.degree()));
    v[m.factors.front().first] += c;
  }
  return v;
}

std::string Presentation::to_string(const Monomial& m) const
{
  if (m.factors.empty())
    return "1";
  std::string out;
  for (const auto& [g, e] : m.factors) {
    if (!out.empty())
      out += '*';
    const auto& label = generators[g];
    out += label.is_subset() ? "tau" + pwpoly::to_string(label.subset, type()) : "tau_s" + std::to_string(label.k);
    if (e > 1)
      out += '^' + std::to_string(e);
  }
  return out;
}

std::string Presentation::to_string(const MonomialCombination& x) const
{
  if (x.is_zero())
    return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1)
      out += pwpoly::to_string(a) + "*";
    out += to_string(m);
  }
  return out;
}

Presentation presentation_partitioned(const ParabolicK& pk)
{
  const auto rs = build_root_system(pk.type);
  Presentation p;
  p.pk = pk;
  p.generators = facet_family(pk).labels;
  p.graph = intersection_graph(pk);
  for (const auto& label : p.generators) {
    if (label.is_subset()) {
      p.normals.push_back(subset_normal(label.subset, pk.type));
    } else {
      RVec v = rs.coroots[static_cast<std::size_t>(label.k - 1)];
      for (auto& c : v)
        c = -c;
      p.normals.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    for (std::size_t j = i + 1; j < p.generators.size(); ++j)
      if (!p.graph.adjacent(i, j))
        p.nonface_pairs.push_back({i, j});
  p.linear_relation_matrix = Matrix(rs.simple_roots.size(), p.generators.size());
  for (std::size_t r = 0; r < rs.simple_roots.size(); ++r)
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      p.linear_relation_matrix(r, g) = pairing(rs.simple_roots[r], p.normals[g]);
  return p;
}

Presentation presentation_full(const RSType& type)
{
  return presentation_partitioned(make_parabolic(type, {}));
}

MonomialCombination reduce_by_nonfaces(const MonomialCombination& x, const Presentation& p)
{
  MonomialCombination out;
  for (const auto& [m, c] : x.terms())
    if (p.is_face(m))
      out.add(m, c);
  return out;
}

// ---- orbit sums ------------------------------------------------------------

MonomialCombination orbit_sum(Subset I, const std::vector<SignedPermutation>& group, const Presentation& p,
                              int exponent)
{
  std::set<Subset> images;
  for (const auto& w : group)
    images.insert(act_on_subset(w, I));
  MonomialCombination x;
  for (Subset J : images)
    x.add(Monomial::generator(p.index_of(J), exponent), 1);
  return x;
}

MonomialCombination orbit_sum(Subset I, const ParabolicK& pk)
{
  return orbit_sum(I, enumerate_parabolic(pk), presentation_full(pk.type));
}

MonomialCombination chain_orbit_sum(const std::vector<Subset>& chain, const std::vector<int>& m,
                                    const std::vector<SignedPermutation>& group, const Presentation& p)
{
  std::set<Monomial> monomials;
  for (const auto& w : group) {
    Monomial mono;
    for (std::size_t i = 0; i < chain.size(); ++i)
      mono = mono * Monomial::generator(p.index_of(act_on_subset(w, chain[i])), m[i]);
    monomials.insert(std::move(mono));
  }
  MonomialCombination x;
  for (const auto& mono : monomials)
    x.add(mono, 1);
  return x;
}

OrbitProductComparison compare_orbit_product(const std::vector<Subset>& chain, const std::vector<int>& m,
                                             const std::vector<SignedPermutation>& group, const Presentation& p)
{
  if (chain.size() != m.size())
    throw std::invalid_argument("chain and exponent vector differ in length");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!(chain[i - 1].subset_of(chain[i]) && chain[i - 1] != chain[i]))
      throw std::invalid_argument("chain is not strictly nested");
  OrbitProductComparison out;
  out.direct = chain_orbit_sum(chain, m, group, p);
  MonomialCombination prod = MonomialCombination::of(Monomial::one());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto orbit = orbit_sum(chain[i], group, p);
    // reducing after every factor keeps the intermediate sums small; a
    // nonface support stays a nonface after further multiplication
    for (int e = 0; e < m[i]; ++e)
      prod = reduce_by_nonfaces(prod * orbit, p);
  }
  out.product = std::move(prod);
  out.equal = out.direct == out.product;
  return out;
}

bool verify_orbit_product(const ParabolicK& pk, const std::vector<Subset>& chain, const std::vector<int>& m)
{
  return compare_orbit_product(chain, m, enumerate_parabolic(pk), presentation_full(pk.type)).equal;
}

std::vector<SignedPermutation> alternating_subgroup(const RSType& type)
{
  if (type.family != Family::A)
    throw std::invalid_argument("alternating subgroup is defined here for type A only");
  std::vector<SignedPermutation> out;
  for_each_group_element(type, [&](const SignedPermutation& w) {
    int inversions = 0;
    for (int i = 1; i <= type.n; ++i)
      for (int j = i + 1; j <= type.n; ++j)
        inversions += w(i) > w(j);
    if (inversions % 2 == 0)
      out.push_back(w);
  });
  return out;
}

std::string instance_name(const ParabolicK& pk)
{
  return pk.type.name() + " K=" + pk.k_string();
}

std::string SuiteReport::summary() const
{
  std::ostringstream os;
  os << suite << " " << instance << ": " << (pass() ? "pass" : "FAIL") << ", " << checked << " checked";
  if (!violations.empty())
    os << ", " << violations.size() << " violations";
  for (const auto& [k, v] : stats)
    os << ", " << k << "=" << v;
  return os.str();
}

namespace {

void append_violation(SuiteReport& r, std::string text)
{
  // keep reports bounded; the count is still exact
  constexpr std::size_t kMaxListed = 50;
  if (r.violations.size() < kMaxListed)
    r.violations.push_back(std::move(text));
  else if (r.violations.size() == kMaxListed)
    r.violations.push_back("... further violations omitted");
}

std::string join_chain(const std::vector<Subset>& chain, const std::vector<int>& m, const RSType& type)
{
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i)
      s += " < ";
    s += to_string(chain[i], type) + "^" + std::to_string(m[i]);
  }
  return s;
}

} // namespace

SuiteReport sweep_orbit_product(const ParabolicK& pk, int max_length, int max_exponent)
{
  SuiteReport r;
  r.suite = "orbit-product";
  r.instance = instance_name(pk);
  const auto group = enumerate_parabolic(pk);
  const auto full = presentation_full(pk.type);
  const auto family = base_family(pk.type);
  std::uint64_t violations = 0;

  std::vector<Subset> chain;
  std::vector<int> m;
  std::function<void(std::size_t)> exponents = [&](std::size_t i) {
    if (i == chain.size()) {
      ++r.checked;
      auto cmp = compare_orbit_product(chain, m, group, full);
      if (!cmp.equal) {
        ++violations;
        append_violation(r, join_chain(chain, m, pk.type) + ": direct " + full.to_string(cmp.direct) +
                                " vs product " + full.to_string(cmp.product));
      }
      return;
    }
    for (int e = 1; e <= max_exponent; ++e) {
      m[i] = e;
      exponents(i + 1);
    }
  };
  std::function<void()> extend = [&] {
    m.assign(chain.size(), 1);
    exponents(0);
    if (static_cast<int>(chain.size()) == max_length)
      return;
    for (Subset J : family) {
      const Subset last = chain.back();
      if (last.subset_of(J) && last != J) {
        chain.push_back(J);
        extend();
        chain.pop_back();
      }
    }
  };
  for (Subset I : family) {
    chain = {I};
    extend();
  }
  r.stats.push_back({"group_order", std::to_string(group.size())});
  r.stats.push_back({"violation_count", std::to_string(violations)});
  return r;
}

// ---- c-coefficients --------------------------------------------------------

std::map<int, BigInt> c_coefficients(Subset I, const SignedPermutation& v, const ParabolicK& pk,
                                     const RootSystem& rs)
{
  const Subset vI = act_on_subset(v, I);
  RVec diff = subset_normal(I, pk.type);
  const RVec other = subset_normal(vI, pk.type);
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] -= other[i];
  auto expansion = coroot_span_expand(diff, pk.K, rs);
  const auto where = [&] {
    return instance_name(pk) + " I=" + to_string(I, pk.type) + " v=" + v.one_line(pk.type);
  };
  if (!expansion)
    throw InvariantViolation("e_I - e_v(I) is not in the coroot span for " + where());
  std::map<int, BigInt> out;
  for (const auto& [k, c] : *expansion) {
    if (!is_integer(c) || c < 0)
      throw InvariantViolation("c_" + std::to_string(k) + " = " + to_string(c) +
                               " is not a nonnegative integer for " + where());
    out[k] = boost::multiprecision::numerator(c);
  }
  return out;
}

std::map<int, BigInt> c_coefficients(Subset I, const SignedPermutation& v, const ParabolicK& pk)
{
  return c_coefficients(I, v, pk, build_root_system(pk.type));
}

namespace {

// X ⊆ S or X ⊇ S
bool nested_either_way(Subset x, Subset s)
{
  return x.subset_of(s) || s.subset_of(x);
}

} // namespace

bool c_vanishing_hypothesis(Subset vI, int k, const ParabolicK& pk, const OrbitDecomposition& dec)
{
  const int n = pk.type.n;
  const auto& part = dec.part_of(k);
  const Subset N = part.elements;
  const Subset first_k = Subset::interval(1, k);
  // {n̄, ..., j̄}
  const auto hat = [&](int j) { return j > n ? Subset{} : overline(Subset::interval(j, n), n); };

  if (pk.type.family == Family::A)
    return nested_either_way(vI & N, first_k & N);

  if (pk.type.family != Family::D) {
    if (part.kind == OrbitKind::Unbarred) {
      const Subset Nbar = overline(N, n);
      return nested_either_way(vI & N, first_k & N) && nested_either_way(vI & Nbar, hat(k + 1) & Nbar);
    }
    return nested_either_way(vI & N, first_k & N);
  }

  const int nbar = bar(n, n);
  switch (part.kind) {
  case OrbitKind::Unbarred: {
    const Subset Nbar = overline(N, n);
    return nested_either_way(vI & N, first_k & N) && nested_either_way(vI & Nbar, hat(k + 1) & Nbar);
  }
  case OrbitKind::Twisted: {
    // k ∈ N' ⊂ [n-1] ∪ {n̄}
    const Subset Nbar = overline(N, n);
    Subset s = hat(k + 1);
    s.erase(nbar);
    s.insert(n);
    return nested_either_way(vI & N, first_k & N) && nested_either_way(vI & Nbar, s & Nbar);
  }
  case OrbitKind::TwistedBar: {
    // k = n lies in overline(N'); N' is the conjugate part
    const Subset Nprime = overline(N, n);
    return nested_either_way(vI & Nprime, Subset::interval(1, n - 1) & Nprime) &&
           nested_either_way(vI & N, Subset::of({n}) & N);
  }
  case OrbitKind::SelfConjugate: {
    const Subset x = vI & N;
    if (k <= n - 2)
      return nested_either_way(x, first_k & N);
    const Subset lower = Subset::interval(1, n - 1);
    auto flipped = [&](Subset base, int i) {
      base.erase(i);
      base.insert(bar(i, n));
      return base;
    };
    if (k == n - 1) {
      Subset with_nbar = lower;
      with_nbar.insert(nbar);
      if (x.subset_of(with_nbar & N) || (lower & N).subset_of(x))
        return true;
      for (int i : (lower & N).elements())
        if (x == (flipped(with_nbar, i) & N))
          return true;
      return false;
    }
    const Subset all = Subset::interval(1, n);
    if (x.subset_of(all & N) || (lower & N).subset_of(x))
      return true;
    for (int i : (lower & N).elements())
      if (x == (flipped(all, i) & N))
        return true;
    return false;
  }
  default:
    throw std::logic_error("unexpected orbit component for k = " + std::to_string(k));
  }
}

SuiteReport verify_c_coefficients(const ParabolicK& pk)
{
  SuiteReport r;
  r.suite = "c-coeffs";
  r.instance = instance_name(pk);
  const auto rs = build_root_system(pk.type);
  const auto group = enumerate_parabolic(pk);
  BigInt largest = 0;
  for (const auto& label : facet_family(pk).labels) {
    if (!label.is_subset())
      continue;
    for (const auto& v : group) {
      ++r.checked;
      try {
        for (const auto& [k, c] : c_coefficients(label.subset, v, pk, rs))
          largest = std::max(largest, c);
      } catch (const InvariantViolation& e) {
        append_violation(r, e.what());
      }
    }
  }
  r.stats.push_back({"max_coefficient", largest.str()});
  return r;
}

SuiteReport verify_c_vanishing(const ParabolicK& pk)
{
  SuiteReport r;
  r.suite = "c-vanishing";
  r.instance = instance_name(pk);
  const auto rs = build_root_system(pk.type);
  const auto group = enumerate_parabolic(pk);
  const auto dec = orbit_decomposition(pk);
  const auto family = facet_family(pk);
  std::uint64_t hypotheses = 0, nonzero = 0, violations = 0;
  for (const auto& label : family.labels) {
    if (!label.is_subset())
      continue;
    const Subset I = label.subset;
    for (const auto& v : group) {
      ++r.checked;
      std::map<int, BigInt> c;
      try {
        c = c_coefficients(I, v, pk, rs);
      } catch (const InvariantViolation& e) {
        ++violations;
        append_violation(r, e.what());
        continue;
      }
      const Subset vI = act_on_subset(v, I);
      for (int k : pk.K) {
        if (c[k] != 0)
          ++nonzero;
        if (!c_vanishing_hypothesis(vI, k, pk, dec))
          continue;
        ++hypotheses;
        if (c[k] != 0) {
          ++violations;
          append_violation(r, "c_" + std::to_string(k) + " = " + c[k].str() + " under the vanishing hypothesis, I=" +
                                  to_string(I, pk.type) + " v=" + v.one_line(pk.type));
        }
      }
    }
  }
  r.stats.push_back({"hypothesis_hits", std::to_string(hypotheses)});
  r.stats.push_back({"nonzero_coefficients", std::to_string(nonzero)});
  r.stats.push_back({"violation_count", std::to_string(violations)});
  return r;
}

// ---- φ ---------------------------------------------------------------------

PhiMap::PhiMap(const ParabolicK& pk)
    : pk_(pk), rs_(build_root_system(pk.type)), full_(presentation_full(pk.type)),
      part_(presentation_partitioned(pk)), group_(enumerate_parabolic(pk))
{
  // c_k^{I,v} only depends on v(I), so one v per image suffices
  std::vector<MonomialCombination> hyper(static_cast<std::size_t>(pk.type.rank()) + 1);
  for (const auto& label : part_.generators) {
    if (!label.is_subset())
      continue;
    std::set<Subset> seen;
    for (const auto& v : group_) {
      const Subset J = act_on_subset(v, label.subset);
      if (!seen.insert(J).second)
        continue;
      const auto c = c_coefficients(label.subset, v, pk, rs_);
      const auto mono = Monomial::generator(full_.index_of(J));
      for (const auto& [k, ck] : c)
        hyper[static_cast<std::size_t>(k)].add(mono, Rational(ck));
    }
  }
  for (const auto& label : part_.generators) {
    if (label.is_subset())
      images_.push_back(orbit_sum(label.subset, group_, full_));
    else
      images_.push_back(hyper[static_cast<std::size_t>(label.k)]);
  }
}

MonomialCombination phi_of_generator(const FacetLabel& g, const ParabolicK& pk)
{
  return PhiMap(pk).image(g);
}

DegreeTwoIdeal::DegreeTwoIdeal(const Presentation& full) : full_(full)
{
  const std::size_t g = full_.generators.size();
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) {
      if (i == j || full_.graph.adjacent(i, j)) {
        const auto m = Monomial::generator(i) * Monomial::generator(j);
        columns_.emplace(m, columns_.size());
      }
    }
  }
  const auto rs = build_root_system(full_.type());
  Matrix rows(0, columns_.size());
  for (const auto& u : rs.simple_roots) {
    const auto ell = full_.linear_form(u);
    for (std::size_t j = 0; j < g; ++j) {
      const auto prod = reduce_by_nonfaces(ell * MonomialCombination::of(Monomial::generator(j)), full_);
      RVec row(columns_.size());
      for (const auto& [m, c] : prod.terms())
        row[columns_.at(m)] = c;
      rows.append_row(row);
    }
  }
  echelon_ = row_echelon(rows);
}

bool DegreeTwoIdeal::contains(const MonomialCombination& x) const
{
  const auto reduced = reduce_by_nonfaces(x, full_);
  RVec v(columns_.size());
  for (const auto& [m, c] : reduced.terms()) {
    auto it = columns_.find(m);
    if (it == columns_.end())
      throw std::invalid_argument("DegreeTwoIdeal::contains: not a degree-2 monomial");
    v[it->second] = c;
  }
  return echelon_.contains(v);
}

SuiteReport verify_phi_kernel(const PhiMap& phi)
{
  const auto& full = phi.full();
  const auto& part = phi.partitioned();
  SuiteReport r;
  r.suite = "phi-kernel";
  r.instance = instance_name(part.pk);

  // linear relations: Σ_g <u, ν_g> φ(τ_g) must lie in the full linear ideal
  const auto linear = row_echelon(full.linear_relation_matrix);
  for (std::size_t row = 0; row < part.linear_relation_matrix.rows(); ++row) {
    ++r.checked;
    MonomialCombination image;
    for (std::size_t g = 0; g < part.generators.size(); ++g)
      image += part.linear_relation_matrix(row, g) * phi.image(g);
    if (!linear.contains(full.degree_one_vector(image)))
      append_violation(r, "linear relation u=alpha_" + std::to_string(row + 1) + " maps to " +
                              full.to_string(image) + ", outside the linear ideal");
  }

  std::uint64_t literal = 0, modulo_linear = 0;
  std::optional<DegreeTwoIdeal> ideal;
  for (const auto& [a, b] : part.nonface_pairs) {
    ++r.checked;
    const auto product = reduce_by_nonfaces(phi.image(a) * phi.image(b), full);
    if (product.is_zero()) {
      ++literal;
      continue;
    }
    if (!ideal)
      ideal.emplace(full);
    if (ideal->contains(product)) {
      ++modulo_linear;
      continue;
    }
    append_violation(r, "tau_" + to_string(part.generators[a], part.type()) + " * tau_" +
                            to_string(part.generators[b], part.type()) + " maps to " + full.to_string(product) +
                            ", outside the ideal");
  }
  r.stats.push_back({"linear_generators", std::to_string(part.linear_relation_matrix.rows())});
  r.stats.push_back({"monomial_generators", std::to_string(part.nonface_pairs.size())});
  r.stats.push_back({"literal_zero", std::to_string(literal)});
  r.stats.push_back({"zero_mod_linear", std::to_string(modulo_linear)});
  return r;
}

SuiteReport verify_phi_kernel(const ParabolicK& pk)
{
  return verify_phi_kernel(PhiMap(pk));
}

namespace {

/// H² = Q^{generators} / (row space of the linear relations), with coordinates
/// on the non-pivot columns of the reduced echelon form.
struct DegreeTwoQuotient {
  RowEchelon linear;
  std::vector<std::size_t> free_columns;

  explicit DegreeTwoQuotient(const Presentation& p) : linear(row_echelon(p.linear_relation_matrix))
  {
    std::vector<char> is_pivot(p.generators.size(), 0);
    for (auto c : linear.pivots)
      is_pivot[c] = 1;
    for (std::size_t c = 0; c < p.generators.size(); ++c)
      if (!is_pivot[c])
        free_columns.push_back(c);
  }

  std::size_t dim() const { return free_columns.size(); }

  RVec coords(RVec v) const
  {
    v = linear.normal_form(std::move(v));
    RVec out;
    out.reserve(free_columns.size());
    for (auto c : free_columns)
      out.push_back(v[c]);
    return out;
  }
};

} // namespace

SuiteReport verify_deg2_surjectivity(const PhiMap& phi, std::optional<std::int64_t> expected_h1)
{
  const auto& full = phi.full();
  const auto& part = phi.partitioned();
  const auto& pk = part.pk;
  SuiteReport r;
  r.suite = "deg2-surjectivity";
  r.instance = instance_name(pk);

  const DegreeTwoQuotient h2(full);
  const std::size_t dim = h2.dim();
  const std::size_t gens = full.generators.size();

  // action of s_k on H² in quotient coordinates (columns = images of basis vectors)
  std::vector<Matrix> action;
  for (int k : pk.K) {
    const auto s = simple_reflection(pk.type, k);
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& label = full.generators[h2.free_columns[j]];
      RVec unit(gens);
      unit[full.index_of(act_on_subset(s, label.subset))] = 1;
      const auto image = h2.coords(std::move(unit));
      for (std::size_t i = 0; i < dim; ++i)
        m(i, j) = image[i];
    }
    action.push_back(std::move(m));
  }
  Matrix stacked(0, dim);
  for (const auto& m : action) {
    for (std::size_t i = 0; i < dim; ++i) {
      RVec row = m.row(i);
      row[i] -= 1;
      stacked.append_row(row);
    }
  }
  const std::size_t fixed_dim = pk.K.empty() ? dim : nullspace(stacked).size();
  const auto is_fixed = [&](const RVec& x) {
    for (std::size_t i = 0; i < stacked.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim; ++j)
        s += stacked(i, j) * x[j];
      if (s != 0)
        return false;
    }
    return true;
  };

  Matrix images(0, dim);
  for (std::size_t g = 0; g < part.generators.size(); ++g) {
    ++r.checked;
    const auto x = h2.coords(full.degree_one_vector(phi.image(g)));
    if (!is_fixed(x))
      append_violation(r, "phi(tau_" + to_string(part.generators[g], pk.type) + ") is not W_K-fixed in H^2");
    images.append_row(x);
  }
  const std::size_t image_rank = rank(images);
  ++r.checked;
  if (image_rank != fixed_dim)
    append_violation(r, "images span dimension " + std::to_string(image_rank) + " but the fixed space has dimension " +
                            std::to_string(fixed_dim));

  // φ(τ_{s_k}) = Σ_I <ϖ_k, e_I> φ(τ_I) in H²
  for (std::size_t g = 0; g < part.generators.size(); ++g) {
    const auto& label = part.generators[g];
    if (!label.is_hyperplane())
      continue;
    ++r.checked;
    const auto& varpi = phi.roots().fundamental_weights[static_cast<std::size_t>(label.k - 1)];
    MonomialCombination rhs;
    for (std::size_t h = 0; h < part.generators.size(); ++h)
      if (part.generators[h].is_subset())
        rhs += pairing(varpi, part.normals[h]) * phi.image(h);
    const auto diff = h2.coords(full.degree_one_vector(phi.image(g) - rhs));
    if (!is_zero(diff))
      append_violation(r, "phi(tau_s" + std::to_string(label.k) +
                              ") differs from its fundamental-weight expression in H^2");
  }

  // H² of the partitioned variety has the same dimension
  const std::size_t part_dim = part.generators.size() - rank(part.linear_relation_matrix);
  ++r.checked;
  if (part_dim != fixed_dim)
    append_violation(r, "partitioned H^2 has dimension " + std::to_string(part_dim) + ", fixed space " +
                            std::to_string(fixed_dim));
  if (expected_h1) {
    ++r.checked;
    if (static_cast<std::int64_t>(fixed_dim) != *expected_h1)
      append_violation(r, "fixed space dimension " + std::to_string(fixed_dim) + " differs from h_1 = " +
                              std::to_string(*expected_h1));
  }
  r.stats.push_back({"h2_dim", std::to_string(dim)});
  r.stats.push_back({"fixed_dim", std::to_string(fixed_dim)});
  r.stats.push_back({"image_rank", std::to_string(image_rank)});
  if (expected_h1)
    r.stats.push_back({"h1", std::to_string(*expected_h1)});
  return r;
}

SuiteReport verify_deg2_surjectivity(const ParabolicK& pk)
{
  const auto h = h_polynomial_faces(pk);
  return verify_deg2_surjectivity(PhiMap(pk), h.coeff(1).convert_to<std::int64_t>());
}

} // namespace pwpoly
