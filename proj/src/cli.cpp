#include "pwpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pwpoly/cohomcheck.hpp"
#include "pwpoly/facecount.hpp"
#include "pwpoly/facetcomb.hpp"
#include "pwpoly/geomoracle.hpp"
#include "pwpoly/hesspoly.hpp"

namespace pwpoly {

namespace {

struct HelpRequested {
  std::string text;
};

std::vector<std::string> split_commas(const std::string& text)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::vector<int> parse_k_list(const std::string& text)
{
  std::vector<int> K;
  for (const auto& item : split_commas(text)) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0)
      throw UsageError("--K expects a comma-separated list of integers, got \"" + text + "\"");
    K.push_back(k);
  }
  return K;
}

JobSpec parse_impl(const std::vector<std::string>& args)
{
  CLI::App app{"Partitioned weight polytopes: h-polynomials and verification suites", "pwpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  JobSpec job;
  std::string family, k_text, anchor_text;
  int n = 0;

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("TYPE", family, "root system family: A, B, C or D")->required();
    sub->add_option("n", n, "A: number of coordinates (rank n-1); B/C/D: rank")->required();
    sub->add_option("--K", k_text, "simple roots defining the partition, e.g. 1,2,4");
    if (with_method)
      sub->add_option("--method", job.method, "faces | precup | characters | all")
          ->check(CLI::IsMember({"faces", "precup", "characters", "all"}));
    sub->add_option("--format", job.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", job.out, "write the report to this file");
    sub->add_option("--anchor", anchor_text, "anchor point a_1<...<a_n for the geometric oracle");
    sub->add_option("--workers", job.workers, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--budget", job.budget, "maximal number of group elements to enumerate");
  };

  std::map<std::string, CLI::App*> subs;
  subs["hpoly"] = app.add_subcommand("hpoly", "h-polynomial by faces, Precup's formula and characters");
  subs["fvector"] = app.add_subcommand("fvector", "f-vector by clique counting");
  subs["facets"] = app.add_subcommand("facets", "facet labels and the facet intersection graph");
  subs["sweep"] = app.add_subcommand("sweep", "all K: every applicable method, cross-checked");
  subs["export"] = app.add_subcommand("export", "H-representation and vertices as JSON");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  subs["verify"] = verify;
  verify->add_option("suite", job.suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
  for (auto& [name, sub] : subs)
    add_common(sub, name == "hpoly" || name == "sweep" || name == "verify");
  verify->add_flag("--all-K", job.all_K, "run the suite for every K");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested{std::string(kVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    std::string text = e.what();
    for (auto& [name, sub] : subs)
      if (sub->parsed())
        text += "\n" + sub->help();
    throw UsageError(text);
  }
  for (auto& [name, sub] : subs)
    if (sub->parsed())
      job.command = name;

  try {
    job.type = make_rstype(parse_family(family), n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (job.type.family == Family::A && n < 2)
    throw UsageError("type A needs n >= 2");
  job.K = parse_k_list(k_text);
  try {
    job.K = make_parabolic(job.type, job.K).K;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (job.all_K && !k_text.empty())
    throw UsageError("--K and --all-K are mutually exclusive");
  if (job.method == "characters" && job.type.family != Family::A)
    throw UsageError("the character method is implemented for type A only");
  if (!anchor_text.empty()) {
    RVec a;
    try {
      for (const auto& item : split_commas(anchor_text))
        a.push_back(parse_rational(item));
      make_anchor(job.type, a);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --anchor: ") + e.what());
    }
    job.anchor = std::move(a);
  }
  return job;
}

// ---- report helpers ----------------------------------------------------------

nlohmann::json poly_json(const GradedIntPolynomial& p)
{
  auto j = nlohmann::json::array();
  for (auto c : p.to_int64())
    j.push_back(c);
  return j;
}

nlohmann::json f_json(const FVector& f)
{
  return nlohmann::json(f.f);
}

std::string f_text(const FVector& f)
{
  std::string s = "(";
  for (std::size_t i = 0; i < f.f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.f[i]);
  return s + ")";
}

nlohmann::json job_json(const JobSpec& job)
{
  nlohmann::json j;
  j["command"] = job.command;
  j["family"] = std::string(1, family_letter(job.type.family));
  j["n"] = job.type.n;
  j["type"] = job.type.name();
  if (!job.suite.empty())
    j["suite"] = job.suite;
  if (job.all_K)
    j["K"] = "all";
  else
    j["K"] = job.K;
  if (job.command == "hpoly" || job.command == "sweep" || (job.command == "verify" && job.suite == "cross-method"))
    j["method"] = job.method;
  if (job.anchor) {
    auto a = nlohmann::json::array();
    for (const auto& x : *job.anchor)
      a.push_back(to_string(x));
    j["anchor"] = a;
  }
  j["budget"] = job.budget;
  return j;
}

struct ReportBuilder {
  Report report;
  nlohmann::json checks = nlohmann::json::array();

  void line(std::string s) { report.lines.push_back(std::move(s)); }

  void check(const Check& c)
  {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    line(std::string(c.pass ? "pass" : "FAIL") + "  " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    if (!c.pass)
      report.exit_code = 2;
  }

  void suite(const SuiteReport& r)
  {
    std::string detail = std::to_string(r.checked) + " checked";
    for (const auto& [k, v] : r.stats)
      detail += ", " + k + "=" + v;
    for (const auto& v : r.violations)
      detail += "; " + v;
    check({r.suite + " " + r.instance, r.pass(), detail});
  }
};

std::vector<std::string> methods_for(const JobSpec& job)
{
  if (job.method != "all")
    return {job.method};
  if (job.type.family == Family::A)
    return {"faces", "precup", "characters"};
  return {"faces", "precup"};
}

/// Computes the requested h-polynomials for one K and the property checks on them.
struct MethodResults {
  std::map<std::string, GradedIntPolynomial> h;
  std::optional<FVector> f;
  std::optional<PrecupResult> precup;
};

MethodResults compute_methods(const ParabolicK& pk, const std::vector<std::string>& methods, const JobSpec& job,
                              bool collect_members)
{
  MethodResults r;
  for (const auto& m : methods) {
    if (m == "faces") {
      r.f = f_vector(pk, job.workers);
      r.h[m] = h_from_f(*r.f);
    } else if (m == "precup") {
      r.precup = precup_sweep(pk, job.workers, job.budget, collect_members);
      r.h[m] = r.precup->h;
    } else if (m == "characters") {
      r.h[m] = h_via_characters_A(pk, job.workers, job.budget);
    }
  }
  return r;
}

std::vector<Check> property_checks(const ParabolicK& pk, const MethodResults& r, const std::string& prefix)
{
  std::vector<Check> out;
  const auto name = [&](const std::string& s) { return prefix + s; };
  if (r.h.size() > 1) {
    Check agree{name("methods-agree"), true, ""};
    const auto& ref = r.h.begin()->second;
    for (const auto& [m, h] : r.h) {
      agree.detail += (agree.detail.empty() ? "" : ", ") + m + "=" + h.to_list();
      if (!(h == ref))
        agree.pass = false;
    }
    out.push_back(agree);
  }
  for (const auto& [m, h] : r.h) {
    Check c{name(m + "-properties"), true, ""};
    if (!h.is_palindromic())
      c.detail += "not palindromic; ";
    if (h.is_zero() || h.coeff(h.degree()) != 1)
      c.detail += "leading coefficient is not 1; ";
    if (h.coeff(0) != 1)
      c.detail += "h(0) != 1; ";
    if (h.degree() != pk.type.rank())
      c.detail += "degree " + std::to_string(h.degree()) + " != rank; ";
    if (r.f && h.eval(1) != BigInt(static_cast<unsigned long long>(r.f->f[0])))
      c.detail += "h(1) != vertex count " + std::to_string(r.f->f[0]) + "; ";
    c.pass = c.detail.empty();
    if (c.pass)
      c.detail = "palindromic, h(0)=1, leading 1" + std::string(r.f ? ", h(1)=f_0" : "");
    out.push_back(c);
  }
  if (r.f) {
    auto chi = r.f->euler_characteristic();
    out.push_back({name("euler"), chi == 1, "alternating sum " + std::to_string(chi)});
  }
  return out;
}

std::vector<ParabolicK> job_parabolics(const JobSpec& job)
{
  if (job.all_K || job.command == "sweep")
    return all_parabolics(job.type);
  return {make_parabolic(job.type, job.K)};
}

// ---- commands ------------------------------------------------------------------

void cmd_hpoly(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  const auto pk = make_parabolic(job.type, job.K);
  const auto r = compute_methods(pk, methods_for(job), job, true);
  b.line("type " + pk.type.name() + " K=" + pk.k_string());
  nlohmann::json hj = nlohmann::json::object();
  for (const auto& [m, h] : r.h) {
    hj[m] = poly_json(h);
    std::string label = m + ":";
    label.resize(12, ' ');
    b.line(label + h.to_list() + "  " + h.to_string());
  }
  j["h_polynomial"] = hj;
  if (r.f) {
    j["f_vector"] = f_json(*r.f);
    b.line("f-vector:   " + f_text(*r.f));
  }
  if (r.precup) {
    nlohmann::json wk;
    wk["size"] = r.precup->wk_size;
    auto elems = nlohmann::json::array();
    std::string listing;
    for (const auto& m : r.precup->members) {
      elems.push_back({{"w", m.w.one_line(pk.type)}, {"d", m.d}});
      listing += (listing.empty() ? "" : " ") + m.w.one_line(pk.type);
    }
    wk["elements"] = elems;
    j["W_K_set"] = wk;
    b.line("|W(K)| = " + std::to_string(r.precup->wk_size));
    if (r.precup->members.size() <= 200)
      b.line("W(K): " + listing);
  }
  for (const auto& c : property_checks(pk, r, ""))
    b.check(c);
}

void cmd_fvector(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  const auto pk = make_parabolic(job.type, job.K);
  JobSpec faces_only = job;
  const auto r = compute_methods(pk, {"faces"}, faces_only, false);
  j["f_vector"] = f_json(*r.f);
  j["h_polynomial"] = {{"faces", poly_json(r.h.at("faces"))}};
  b.line("type " + pk.type.name() + " K=" + pk.k_string());
  b.line("f-vector: " + f_text(*r.f));
  b.line("h:        " + r.h.at("faces").to_list() + "  " + r.h.at("faces").to_string());
  for (const auto& c : property_checks(pk, r, ""))
    b.check(c);
}

void cmd_facets(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  const auto pk = make_parabolic(job.type, job.K);
  const auto graph = intersection_graph(pk);
  auto labels = nlohmann::json::array();
  auto edges = nlohmann::json::array();
  b.line("type " + pk.type.name() + " K=" + pk.k_string() + ": " + std::to_string(graph.size()) + " facets");
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto name = to_string(graph.label(i), pk.type);
    labels.push_back(name);
    std::string nbrs;
    for (std::size_t k = 0; k < graph.size(); ++k) {
      if (k == i || !graph.adjacent(i, k))
        continue;
      nbrs += " " + to_string(graph.label(k), pk.type);
      if (i < k)
        edges.push_back({name, to_string(graph.label(k), pk.type)});
    }
    b.line("  " + name + " meets" + (nbrs.empty() ? " nothing" : nbrs));
  }
  j["facets"] = labels;
  j["intersections"] = edges;
}

void cmd_export(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  const auto pk = make_parabolic(job.type, job.K);
  const auto anchor = job.anchor ? make_anchor(job.type, *job.anchor) : default_anchor(job.type);
  j["geometry"] = export_geometry(pk, anchor, job.workers);
  b.line("type " + pk.type.name() + " K=" + pk.k_string() + ", anchor " + to_string(anchor.a));
  b.line(std::to_string(j["geometry"]["halfspaces"].size()) + " half-spaces, " +
         std::to_string(j["geometry"]["vertices"].size()) + " vertices");
  for (const auto& h : j["geometry"]["halfspaces"]) {
    std::string normal;
    for (const auto& x : h["normal"])
      normal += (normal.empty() ? "" : ",") + x.get<std::string>();
    b.line("  " + h["tag"].get<std::string>() + ": (" + normal + ").x >= " + h["bound"].get<std::string>());
  }
  for (const auto& v : j["geometry"]["vertices"]) {
    std::string coords;
    for (const auto& x : v)
      coords += (coords.empty() ? "" : ",") + x.get<std::string>();
    b.line("  vertex (" + coords + ")");
  }
}

void cross_method_for(const ParabolicK& pk, const JobSpec& job, ReportBuilder& b, nlohmann::json& results)
{
  const auto r = compute_methods(pk, methods_for(job), job, false);
  nlohmann::json entry;
  entry["K"] = pk.K;
  nlohmann::json hj = nlohmann::json::object();
  for (const auto& [m, h] : r.h)
    hj[m] = poly_json(h);
  entry["h_polynomial"] = hj;
  if (r.f)
    entry["f_vector"] = f_json(*r.f);
  results.push_back(entry);
  for (const auto& c : property_checks(pk, r, "K=" + pk.k_string() + " "))
    b.check(c);
}

void cmd_sweep(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  auto results = nlohmann::json::array();
  b.line("sweep " + job.type.name() + ", methods " + job.method);
  for (const auto& pk : all_parabolics(job.type))
    cross_method_for(pk, job, b, results);
  j["results"] = results;
}

void cmd_verify(const JobSpec& job, ReportBuilder& b, nlohmann::json& j)
{
  b.line("verify " + job.suite + " " + job.type.name() + (job.all_K ? " (all K)" : " K=" + make_parabolic(job.type, job.K).k_string()));
  auto results = nlohmann::json::array();
  for (const auto& pk : job_parabolics(job)) {
    if (job.suite == "orbit-product") {
      b.suite(sweep_orbit_product(pk));
    } else if (job.suite == "c-coeffs") {
      b.suite(verify_c_coefficients(pk));
    } else if (job.suite == "c-vanishing") {
      b.suite(verify_c_vanishing(pk));
    } else if (job.suite == "phi-kernel") {
      b.suite(verify_phi_kernel(pk));
    } else if (job.suite == "deg2-surjectivity") {
      b.suite(verify_deg2_surjectivity(pk));
    } else if (job.suite == "geometry") {
      const auto first = job.anchor ? make_anchor(job.type, *job.anchor) : default_anchor(job.type);
      auto second = second_anchor(job.type);
      if (second.a == first.a)
        second = default_anchor(job.type);
      for (auto c : verify_combinatorics_against_geometry(pk, first, second, job.workers)) {
        c.name = "K=" + pk.k_string() + " " + c.name;
        b.check(c);
      }
    } else if (job.suite == "cross-method") {
      cross_method_for(pk, job, b, results);
    }
  }
  if (job.suite == "orbit-product" && job.type.family == Family::A && job.type.n == 3) {
    // the alternating subgroup of S_3 is not parabolic, and the identity fails for it
    const auto full = presentation_full(job.type);
    const auto cmp = compare_orbit_product({Subset::of({1}), Subset::of({1, 2})}, {1, 1},
                                           alternating_subgroup(job.type), full);
    b.check({"alternating-subgroup control", !cmp.equal,
             "direct " + full.to_string(cmp.direct) + "; product " + full.to_string(cmp.product)});
  }
  if (!results.empty())
    j["results"] = results;
}

} // namespace

JobSpec parse_job(const std::vector<std::string>& args)
{
  try {
    return parse_impl(args);
  } catch (const HelpRequested& h) {
    throw UsageError(h.text);
  }
}

Report run(const JobSpec& job)
{
  ReportBuilder b;
  nlohmann::json j;
  j["job"] = job_json(job);
  j["version"] = kVersion;
  if (job.command == "hpoly")
    cmd_hpoly(job, b, j);
  else if (job.command == "fvector")
    cmd_fvector(job, b, j);
  else if (job.command == "facets")
    cmd_facets(job, b, j);
  else if (job.command == "export")
    cmd_export(job, b, j);
  else if (job.command == "sweep")
    cmd_sweep(job, b, j);
  else if (job.command == "verify")
    cmd_verify(job, b, j);
  else
    throw UsageError("unknown command \"" + job.command + "\"");
  j["checks"] = b.checks;
  std::size_t failed = 0;
  for (const auto& c : b.checks)
    failed += !c["pass"].get<bool>();
  if (!b.checks.empty())
    b.line(std::to_string(b.checks.size() - failed) + "/" + std::to_string(b.checks.size()) + " checks passed");
  b.report.json = std::move(j);
  return std::move(b.report);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  JobSpec job;
  try {
    job = parse_impl(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = run(job);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return 1;
  } catch (const OracleBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // export to a file is always JSON
  const bool as_json = job.format == "json" || (job.command == "export" && job.out);
  std::string body;
  if (as_json) {
    body = report.json.dump(2) + "\n";
  } else {
    for (const auto& l : report.lines)
      body += l + "\n";
  }
  if (job.out) {
    std::ofstream f(*job.out);
    if (!f) {
      err << "error: cannot write " << *job.out << "\n";
      return 1;
    }
    f << body;
  } else {
    out << body;
  }
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << elapsed;
  err << "time: " << t.str() << " s\n";
  return report.exit_code;
}

} // namespace pwpoly
