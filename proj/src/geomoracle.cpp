#include "pwpoly/geomoracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "pwpoly/linalg.hpp"
#include "pwpoly/parallel.hpp"
#include "pwpoly/rootsys.hpp"

namespace pwpoly {

int oracle_max_n(Family family)
{
  return family == Family::A ? 5 : 4;
}

namespace {

void check_budget(const RSType& type)
{
  if (type.n > oracle_max_n(type.family))
    throw OracleBudgetExceeded("geometric oracle is limited to n <= " + std::to_string(oracle_max_n(type.family)) +
                               " for type " + std::string(1, family_letter(type.family)) + " (got " + type.name() +
                               ")");
}

// a_e for e in the ground set, with a_ī = -a_i
Rational anchor_value(const AnchorPoint& anchor, int e)
{
  const int n = anchor.type.n;
  if (e <= n)
    return anchor.a[static_cast<std::size_t>(e - 1)];
  return -anchor.a[static_cast<std::size_t>(bar(e, n) - 1)];
}

} // namespace

AnchorPoint make_anchor(const RSType& type, RVec values)
{
  if (static_cast<int>(values.size()) != type.n)
    throw std::invalid_argument("anchor for " + type.name() + " needs " + std::to_string(type.n) + " values, got " +
                                std::to_string(values.size()));
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i]))
      throw std::invalid_argument("anchor values must be strictly increasing");
  if (type.family == Family::A) {
    Rational mean = 0;
    for (const auto& v : values)
      mean += v;
    mean /= static_cast<long>(values.size());
    for (auto& v : values)
      v -= mean;
  } else if (!(values.back() < 0)) {
    throw std::invalid_argument("anchor values must be negative for type " +
                                std::string(1, family_letter(type.family)));
  }
  return {type, std::move(values)};
}

AnchorPoint default_anchor(const RSType& type)
{
  RVec a;
  const int n = type.n;
  for (int i = 1; i <= n; ++i) {
    if (type.family == Family::A)
      a.push_back(n % 2 ? Rational(i - (n + 1) / 2) : Rational(2 * i - (n + 1)));
    else
      a.push_back(Rational(i - n - 1));
  }
  return make_anchor(type, std::move(a));
}

AnchorPoint second_anchor(const RSType& type)
{
  RVec a;
  const int n = type.n;
  for (int i = 1; i <= n; ++i) {
    if (type.family == Family::A)
      a.push_back(Rational(i * i));
    else
      a.push_back(Rational(-(n + 1 - i) * (n + 1 - i)));
  }
  return make_anchor(type, std::move(a));
}

Rational facet_bound(Subset I, const AnchorPoint& anchor)
{
  const auto& type = anchor.type;
  const int n = type.n;
  const int size = I.size();
  Rational s = 0;
  if (type.family == Family::D && size == n && bar_count(I, n) % 2 == 1) {
    for (int j = 1; j <= n - 1; ++j)
      s += anchor_value(anchor, j);
    return s + anchor_value(anchor, bar(n, n));
  }
  for (int j = 1; j <= size; ++j)
    s += anchor_value(anchor, j);
  return s;
}

RVec orbit_point(const SignedPermutation& u, const AnchorPoint& anchor)
{
  RVec x;
  for (int i = 1; i <= anchor.type.n; ++i)
    x.push_back(anchor_value(anchor, u(i)));
  return x;
}

std::vector<HalfSpace> h_representation(const ParabolicK& pk, const AnchorPoint& anchor)
{
  check_budget(pk.type);
  if (!(anchor.type == pk.type))
    throw std::invalid_argument("anchor type does not match " + pk.type.name());
  std::vector<HalfSpace> out;
  for (Subset I : base_family(pk.type))
    out.push_back({subset_normal(I, pk.type), facet_bound(I, anchor), FacetLabel::of_subset(I)});
  const auto rs = build_root_system(pk.type);
  for (int k : pk.K) {
    RVec v = rs.coroots[static_cast<std::size_t>(k - 1)];
    for (auto& c : v)
      c = -c;
    out.push_back({std::move(v), Rational(0), FacetLabel::of_hyperplane(k)});
  }
  return out;
}

namespace {

struct VertexSearch {
  const std::vector<HalfSpace>& hrep;
  const RSType& type;
  std::size_t dim;
  std::set<RVec>& found;
  std::mutex& lock;

  bool feasible(const RVec& x) const
  {
    for (const auto& h : hrep)
      if (dot(h.normal, x) < h.bound)
        return false;
    return true;
  }

  void leaf(const std::vector<std::size_t>& chosen)
  {
    const auto n = static_cast<std::size_t>(type.n);
    Matrix a(0, n);
    RVec b;
    for (auto i : chosen) {
      a.append_row(hrep[i].normal);
      b.push_back(hrep[i].bound);
    }
    if (type.family == Family::A) {
      a.append_row(RVec(n, 1));
      b.push_back(0);
    }
    auto x = solve_unique(a, b);
    if (!x || !feasible(*x))
      return;
    std::lock_guard<std::mutex> guard(lock);
    found.insert(std::move(*x));
  }

  // echelon holds the chosen normals reduced; a candidate must stay independent
  void extend(std::vector<std::size_t>& chosen, RowEchelon& echelon, std::size_t next)
  {
    if (chosen.size() == dim) {
      leaf(chosen);
      return;
    }
    for (std::size_t i = next; i + (dim - chosen.size()) <= hrep.size(); ++i) {
      if (echelon.contains(hrep[i].normal))
        continue;
      RowEchelon grown = grow(echelon, hrep[i].normal);
      chosen.push_back(i);
      extend(chosen, grown, i + 1);
      chosen.pop_back();
    }
  }

  RowEchelon grow(const RowEchelon& e, const RVec& row) const
  {
    Matrix m = e.reduced;
    if (m.cols() == 0)
      m = Matrix(0, row.size());
    m.append_row(row);
    return row_echelon(m);
  }
};

} // namespace

std::vector<RVec> enumerate_vertices(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers)
{
  check_budget(type);
  std::set<RVec> found;
  std::mutex lock;
  const auto dim = static_cast<std::size_t>(type.rank());
  const auto n = static_cast<std::size_t>(type.n);
  RowEchelon base;
  base.reduced = Matrix(0, n);
  if (type.family == Family::A)
    base = row_echelon(Matrix::from_rows({RVec(n, 1)}, n));
  parallel_for(hrep.size(), workers, [&](std::size_t first) {
    if (first + dim > hrep.size() || base.contains(hrep[first].normal))
      return;
    VertexSearch search{hrep, type, dim, found, lock};
    std::vector<std::size_t> chosen{first};
    RowEchelon e = search.grow(base, hrep[first].normal);
    search.extend(chosen, e, first + 1);
  });
  return {found.begin(), found.end()};
}

namespace {

int affine_dim(const std::vector<const RVec*>& points)
{
  if (points.size() <= 1)
    return 0;
  Matrix m(0, points.front()->size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVec d = *points[i];
    for (std::size_t c = 0; c < d.size(); ++c)
      d[c] -= (*points.front())[c];
    m.append_row(d);
  }
  return static_cast<int>(rank(m));
}

} // namespace

GeometricFaces geometric_faces(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers)
{
  if (hrep.size() > TightSet().size())
    throw OracleBudgetExceeded("too many half-spaces for the oracle: " + std::to_string(hrep.size()));
  GeometricFaces g;
  g.dim = type.rank();
  g.vertices = enumerate_vertices(hrep, type, workers);
  for (const auto& v : g.vertices) {
    TightSet t;
    for (std::size_t h = 0; h < hrep.size(); ++h)
      if (dot(hrep[h].normal, v) == hrep[h].bound)
        t.set(h);
    g.vertex_tight.push_back(t);
  }

  // closed tight set of the face cut out by T: intersect the tight sets of all
  // vertices lying on T
  const auto close = [&](const TightSet& t) {
    TightSet out;
    out.set();
    bool any = false;
    for (const auto& vt : g.vertex_tight) {
      if ((vt & t) == t) {
        out &= vt;
        any = true;
      }
    }
    return any ? out : t;
  };
  std::set<std::string> seen;
  std::vector<TightSet> queue;
  for (const auto& vt : g.vertex_tight) {
    auto c = close(vt);
    if (seen.insert(c.to_string()).second)
      queue.push_back(c);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& vt : g.vertex_tight) {
      auto c = close(queue[qi] & vt);
      if (seen.insert(c.to_string()).second)
        queue.push_back(c);
    }
  }
  if (!g.vertices.empty()) {
    // the polytope itself, in case some inequality is tight everywhere
    TightSet none;
    auto c = close(none);
    if (seen.insert(c.to_string()).second)
      queue.push_back(c);
  }
  std::sort(queue.begin(), queue.end(), [](const TightSet& a, const TightSet& b) {
    return a.to_string() < b.to_string();
  });
  for (const auto& t : queue) {
    std::vector<const RVec*> pts;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if ((g.vertex_tight[v] & t) == t)
        pts.push_back(&g.vertices[v]);
    g.faces.push_back(t);
    g.face_dim.push_back(affine_dim(pts));
  }
  std::set<std::size_t> facets;
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    if (g.face_dim[f] != g.dim - 1)
      continue;
    for (std::size_t h = 0; h < hrep.size(); ++h)
      if (g.faces[f].test(h))
        facets.insert(h);
  }
  g.facets.assign(facets.begin(), facets.end());
  return g;
}

FVector geometric_f_vector(const std::vector<HalfSpace>& hrep, const RSType& type, unsigned workers)
{
  auto g = geometric_faces(hrep, type, workers);
  FVector f;
  f.f.assign(static_cast<std::size_t>(g.dim) + 1, 0);
  for (int d : g.face_dim)
    ++f.f[static_cast<std::size_t>(d)];
  return f;
}

namespace {

std::string f_string(const FVector& f)
{
  std::string s = "(";
  for (std::size_t i = 0; i < f.f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.f[i]);
  return s + ")";
}

/// Geometric incidence data keyed by facet label.
struct Incidence {
  std::set<FacetLabel> facets;
  std::set<std::pair<FacetLabel, FacetLabel>> meeting;  // unordered pairs stored with first < second
  FVector f;
};

struct AnchorRun {
  Incidence inc;
  std::vector<Check> checks;
};

AnchorRun run_anchor(const ParabolicK& pk, const AnchorPoint& anchor, const std::string& suffix, unsigned workers)
{
  AnchorRun out;
  const auto hrep = h_representation(pk, anchor);
  const auto g = geometric_faces(hrep, pk.type, workers);
  const auto graph = intersection_graph(pk);
  const auto& type = pk.type;

  // (1) facet set
  {
    Check c{"facet-set" + suffix, true, ""};
    for (auto h : g.facets)
      out.inc.facets.insert(hrep[h].tag);
    std::set<FacetLabel> expected(graph.labels().begin(), graph.labels().end());
    for (const auto& l : expected)
      if (!out.inc.facets.count(l)) {
        c.pass = false;
        c.detail += "missing " + to_string(l, type) + "; ";
      }
    for (const auto& l : out.inc.facets)
      if (!expected.count(l)) {
        c.pass = false;
        c.detail += "unexpected " + to_string(l, type) + "; ";
      }
    // two inequalities cutting out the same facet would hide a label clash
    std::set<std::string> facet_faces;
    for (std::size_t f = 0; f < g.faces.size(); ++f)
      if (g.face_dim[f] == g.dim - 1)
        facet_faces.insert(g.faces[f].to_string());
    if (facet_faces.size() != g.facets.size()) {
      c.pass = false;
      c.detail += "facet faces " + std::to_string(facet_faces.size()) + " vs facet inequalities " +
                  std::to_string(g.facets.size()) + "; ";
    }
    if (c.pass)
      c.detail = std::to_string(out.inc.facets.size()) + " facets";
    out.checks.push_back(std::move(c));
  }

  // (2) pairwise intersections
  {
    Check c{"intersection-graph" + suffix, true, ""};
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < g.facets.size(); ++i) {
      for (std::size_t j = i + 1; j < g.facets.size(); ++j) {
        const auto hi = g.facets[i], hj = g.facets[j];
        bool meet = false;
        for (const auto& vt : g.vertex_tight)
          if (vt.test(hi) && vt.test(hj)) {
            meet = true;
            break;
          }
        auto a = hrep[hi].tag, b = hrep[hj].tag;
        if (b < a)
          std::swap(a, b);
        if (meet)
          out.inc.meeting.insert({a, b});
        if (!graph.has_label(a) || !graph.has_label(b))
          continue;
        bool adjacent = graph.adjacent(graph.index_of(a), graph.index_of(b));
        if (adjacent != meet) {
          c.pass = false;
          if (++disagreements <= 10)
            c.detail += to_string(a, type) + "/" + to_string(b, type) + (meet ? " meet" : " disjoint") +
                        " geometrically; ";
        }
      }
    }
    if (c.pass)
      c.detail = std::to_string(out.inc.meeting.size()) + " meeting pairs";
    out.checks.push_back(std::move(c));
  }

  // (3) simpleness: each vertex lies on exactly dim facets
  {
    Check c{"simple" + suffix, true, ""};
    TightSet facet_mask;
    for (auto h : g.facets)
      facet_mask.set(h);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto count = static_cast<int>((g.vertex_tight[v] & facet_mask).count());
      if (count != g.dim) {
        c.pass = false;
        c.detail = "vertex " + to_string(g.vertices[v]) + " lies on " + std::to_string(count) + " facets";
        break;
      }
    }
    if (c.pass)
      c.detail = std::to_string(g.vertices.size()) + " vertices";
    out.checks.push_back(std::move(c));
  }

  // (4) flagness: every clique of the facet graph has a common vertex
  {
    Check c{"flag" + suffix, true, ""};
    std::map<std::size_t, std::size_t> halfspace_of;  // graph index -> hrep index
    for (std::size_t h = 0; h < hrep.size(); ++h)
      if (graph.has_label(hrep[h].tag))
        halfspace_of[graph.index_of(hrep[h].tag)] = h;
    std::uint64_t cliques = 0;
    for_each_clique(graph, g.dim + 1, [&](const std::vector<std::size_t>& clique) {
      if (!c.pass)
        return;
      ++cliques;
      TightSet need;
      for (auto i : clique)
        need.set(halfspace_of.at(i));
      bool common = false;
      for (const auto& vt : g.vertex_tight)
        if ((vt & need) == need) {
          common = true;
          break;
        }
      if (!common) {
        c.pass = false;
        c.detail = "clique without common vertex:";
        for (auto i : clique)
          c.detail += " " + to_string(graph.label(i), type);
      }
    });
    if (c.pass)
      c.detail = std::to_string(cliques) + " cliques";
    out.checks.push_back(std::move(c));
  }

  // (5) f-vector
  {
    out.inc.f.f.assign(static_cast<std::size_t>(g.dim) + 1, 0);
    for (int d : g.face_dim)
      ++out.inc.f.f[static_cast<std::size_t>(d)];
    Check c{"f-vector" + suffix, true, ""};
    try {
      const auto comb = f_vector_of_graph(graph, g.dim, workers);
      c.pass = comb == out.inc.f;
      c.detail = "geometric " + f_string(out.inc.f) + ", combinatorial " + f_string(comb);
    } catch (const NonSimpleStructure& e) {
      c.pass = false;
      c.detail = e.what();
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

} // namespace

std::vector<Check> verify_combinatorics_against_geometry(const ParabolicK& pk, const AnchorPoint& anchor,
                                                         const AnchorPoint& second, unsigned workers)
{
  auto first = run_anchor(pk, anchor, "", workers);
  auto other = run_anchor(pk, second, " (second anchor)", workers);
  std::vector<Check> out = std::move(first.checks);
  for (auto& c : other.checks)
    out.push_back(std::move(c));
  Check same{"anchor-independence", true, ""};
  if (first.inc.facets != other.inc.facets)
    same.detail += "facet sets differ; ";
  if (first.inc.meeting != other.inc.meeting)
    same.detail += "facet intersections differ; ";
  if (!(first.inc.f == other.inc.f))
    same.detail += "f-vectors " + f_string(first.inc.f) + " vs " + f_string(other.inc.f) + "; ";
  same.pass = same.detail.empty();
  if (same.pass)
    same.detail = "anchors " + to_string(anchor.a) + " and " + to_string(second.a) + " agree";
  out.push_back(std::move(same));
  return out;
}

std::vector<Check> verify_combinatorics_against_geometry(const ParabolicK& pk, unsigned workers)
{
  return verify_combinatorics_against_geometry(pk, default_anchor(pk.type), second_anchor(pk.type), workers);
}

FacetLabel parse_facet_label(const std::string& text, const RSType& type)
{
  auto fail = [&] { return std::invalid_argument("malformed facet label \"" + text + "\""); };
  if (text.size() >= 2 && text[0] == 'H') {
    std::size_t used = 0;
    int k = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1 || k < 1 || k > type.rank())
      throw fail();
    return FacetLabel::of_hyperplane(k);
  }
  if (text.size() < 3 || text[0] != 'F' || text[1] != '{' || text.back() != '}')
    throw fail();
  Subset s;
  std::string body = text.substr(2, text.size() - 3);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() || v == 0 || std::abs(v) > type.n || (v < 0 && !type.has_bars()))
      throw fail();
    s.insert(v > 0 ? v : bar(-v, type.n));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return FacetLabel::of_subset(s);
}

namespace {

nlohmann::json rvec_json(const RVec& v)
{
  auto j = nlohmann::json::array();
  for (const auto& x : v)
    j.push_back(to_string(x));
  return j;
}

RVec rvec_from_json(const nlohmann::json& j)
{
  RVec v;
  for (const auto& x : j)
    v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

} // namespace

nlohmann::json export_geometry(const ParabolicK& pk, const AnchorPoint& anchor, unsigned workers)
{
  const auto hrep = h_representation(pk, anchor);
  nlohmann::json j;
  j["family"] = std::string(1, family_letter(pk.type.family));
  j["n"] = pk.type.n;
  j["type"] = pk.type.name();
  j["K"] = pk.K;
  j["anchor"] = rvec_json(anchor.a);
  auto hs = nlohmann::json::array();
  for (const auto& h : hrep)
    hs.push_back({{"normal", rvec_json(h.normal)}, {"bound", to_string(h.bound)}, {"tag", to_string(h.tag, pk.type)}});
  j["halfspaces"] = std::move(hs);
  auto vs = nlohmann::json::array();
  for (const auto& v : enumerate_vertices(hrep, pk.type, workers))
    vs.push_back(rvec_json(v));
  j["vertices"] = std::move(vs);
  return j;
}

ImportedGeometry import_geometry(const nlohmann::json& j)
{
  const auto type = make_rstype(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>());
  ImportedGeometry out{make_parabolic(type, j.at("K").get<std::vector<int>>()),
                       make_anchor(type, rvec_from_json(j.at("anchor"))),
                       {},
                       {}};
  for (const auto& h : j.at("halfspaces"))
    out.hrep.push_back({rvec_from_json(h.at("normal")), parse_rational(h.at("bound").get<std::string>()),
                        parse_facet_label(h.at("tag").get<std::string>(), type)});
  for (const auto& v : j.at("vertices"))
    out.vertices.push_back(rvec_from_json(v));
  return out;
}

} // namespace pwpoly
