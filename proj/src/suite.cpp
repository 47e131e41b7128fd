#include "twistkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "twistkit/contraction.hpp"
#include "twistkit/displays.hpp"
#include "twistkit/poincare.hpp"
#include "twistkit/poisson.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/render.hpp"

namespace twistkit {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// Mixed brackets use the polarized form; the one-sided expression with two
// different arguments is not totally antisymmetric.
ReportEntry mixed_bracket(const std::string& a, const std::string& b, const LieAlgebra& g) {
  const auto t0 = clock_type::now();
  const WedgeTrivector s = schouten(registered_rmatrix(a), registered_rmatrix(b), g);
  ReportEntry e;
  e.id = "ybe.mixed." + a + "," + b;
  e.title = "[[" + a + "," + b + "]] = 0";
  e.orders = "exact";
  if (!s.is_zero()) {
    e.status = Status::fail;
    e.residual = s.render();
  }
  e.seconds = since(t0);
  return e;
}

ReportEntry cocycle_entry(const std::string& id, const std::string& title, const CocycleResult& r) {
  ReportEntry e;
  e.id = id;
  e.title = title;
  e.orders = r.orders;
  std::string res;
  if (!r.residual.is_zero()) res = "cocycle: " + render_text(r.residual);
  if (!r.normalization_left.is_zero()) res += (res.empty() ? "" : "; ") + ("(eps x 1)F - 1: " + render_text(r.normalization_left));
  if (!r.normalization_right.is_zero()) res += (res.empty() ? "" : "; ") + ("(1 x eps)F - 1: " + render_text(r.normalization_right));
  e.residual = res;
  e.status = res.empty() ? Status::pass : Status::fail;
  return e;
}

std::string star_pair_id(StarKind k, int i, int j) {
  return "star." + star_kind_name(k) + ".x[" + std::to_string(i) + "],x[" + std::to_string(j) + "]";
}

// Closed forms of [x_i, x_j] (i > j) for the three tables.
Element star_expected(StarKind k, int i, int j) {
  if (j != 0) return {};
  Element e = X(i).scaled(Scalar(GaussRat::i_unit(), ParamMono::of(Param::kinv)));
  if (k == StarKind::kappa_xi && i == 3)
    e += Element::scalar(Scalar(GaussRat(0, ratio(1, 2)), ParamMono::of(Param::xi)));
  if (k == StarKind::kappa_hat) {
    const Scalar ih(GaussRat::i_unit(), ParamMono::of(Param::khinv));
    if (i == 1) e += X(2).scaled(ih);
    if (i == 2) e -= X(1).scaled(ih);
  }
  return e;
}

Report one_entry(ReportEntry e) { return Report{std::move(e)}; }

}  // namespace

Report check_ybe_suite() {
  const LieAlgebra g = LieAlgebra::classical_poincare();
  Report rep;
  rep.push_back(check_mybe("ybe.mybe.r_kappa", r_kappa(), mybe_rhs(), g));
  rep.push_back(check_cybe("ybe.cybe.r_xi", r_xi(), g));
  rep.push_back(check_cybe("ybe.cybe.r_kappa_hat", r_kappa_hat(), g));
  const char* names[] = {"r_kappa", "r_kappa_hat", "r_xi"};
  for (const char* a : names)
    for (const char* b : names)
      if (std::string(a) != b) rep.push_back(mixed_bracket(a, b, g));
  rep.push_back(check_mybe("ybe.mybe.r_total", registered_rmatrix("r_total"), mybe_rhs(), g));
  const auto jac = g.jacobi_failures();
  ReportEntry j;
  j.id = "ybe.algebra.jacobi";
  j.title = "Jacobi identity of the Poincare structure constants";
  j.orders = "exact";
  if (!jac.empty()) {
    j.status = Status::fail;
    j.residual = jac.front();
  }
  rep.push_back(j);
  return rep;
}

Report check_cocycles(const TruncationPolicy& policy) {
  const HopfPresentation k = kappa_poincare(policy);
  Report rep;
  for (const auto& [id, name] : {std::pair{"cocycle.F-xi-kappa", "F-xi-kappa"}, std::pair{"cocycle.F-hat-kappa", "F-hat-kappa"}}) {
    const auto t0 = clock_type::now();
    rep.push_back(cocycle_entry(id, std::string("cocycle and normalization of ") + name,
                                check_cocycle(k, registered_twist(name, k.alg()))));
    rep.back().seconds = since(t0);
  }
  {
    const auto t0 = clock_type::now();
    const CocycleResult r = check_cocycle(k, registered_twist("F-flat", k.alg()));
    ReportEntry e;
    e.id = "cocycle.F-flat.negative-control";
    e.title = "flat twist against the kappa coproduct leaves a xi kinv residual";
    e.orders = r.orders;
    bool seen = false;
    for (const auto& [key, v] : r.residual.terms())
      seen = seen || (key.params[Param::xi] == 1 && key.params[Param::kinv] == 1);
    e.computed = r.residual.is_zero() ? "0" : render_text(r.residual.filtered([](const ParamMono& m) {
      return m[Param::xi] == 1 && m[Param::kinv] == 1;
    }));
    e.status = seen ? Status::pass : Status::fail;
    if (!seen) e.note = "no residual at order xi kinv";
    e.seconds = since(t0);
    rep.push_back(e);
  }
  return rep;
}

Report check_star_tables(const StarOptions& options) {
  Report rep;
  for (StarKind k : {StarKind::kappa, StarKind::kappa_xi, StarKind::kappa_hat}) {
    const StarOperator op = build_star_operator(k, options);
    for (int i = 1; i <= 3; ++i)
      for (int j = 0; j < i; ++j) {
        const auto t0 = clock_type::now();
        ReportEntry e;
        e.id = star_pair_id(k, i, j);
        e.title = "[x[" + std::to_string(i) + "],x[" + std::to_string(j) + "]] under " + star_kind_name(k);
        e.orders = "exact, gamma order " + std::to_string(options.gamma_order);
        const Element got = star_commutator(X(i), X(j), op);
        const Element want = star_expected(k, i, j);
        e.computed = render_text(got);
        if (got != want) {
          e.status = Status::fail;
          e.expected = render_text(want);
          e.residual = render_text(got - want);
        }
        e.seconds = since(t0);
        rep.push_back(e);
      }
  }
  return rep;
}

Report check_registered_hopf_axioms(const TruncationPolicy& policy) {
  Report rep;
  for (const auto& name : hopf_names()) {
    Report r = check_hopf_axioms(registered_hopf(name, policy));
    rep.insert(rep.end(), r.begin(), r.end());
  }
  return rep;
}

Report check_registry_roundtrip(const TruncationPolicy& policy) {
  const auto t0 = clock_type::now();
  const auto bad = registry_roundtrip_failures(policy);
  ReportEntry e;
  e.id = "parser.roundtrip.registry";
  e.title = "every registered table renders and parses back identically";
  e.orders = policy.describe();
  if (!bad.empty()) {
    e.status = Status::fail;
    e.residual = bad.front();
    e.note = std::to_string(bad.size()) + " tables differ";
  }
  e.seconds = since(t0);
  return one_entry(e);
}

std::vector<std::string> suite_sections() {
  return {"ybe", "cocycle", "twist", "star", "poisson", "contraction", "hopf", "casimir", "registry"};
}

Report run_verify_suite(const SuiteConfig& config) {
  const TruncationPolicy& pol = config.policy;
  const std::vector<std::pair<std::string, std::function<Report()>>> all = {
      {"ybe", [] { return check_ybe_suite(); }},
      {"cocycle", [&] { return check_cocycles(pol); }},
      {"twist",
       [&] {
         Report r = check_twisted_coproducts(pol);
         Report s = check_twisted_antipodes(pol);
         r.insert(r.end(), s.begin(), s.end());
         return r;
       }},
      {"star", [&] { return check_star_tables(config.star); }},
      {"poisson", [] { return check_poisson_quantization(); }},
      {"contraction", [&] { return check_contraction(pol); }},
      {"hopf", [&] { return check_registered_hopf_axioms(pol); }},
      {"casimir", [&] { return check_casimir(pol); }},
      {"registry", [&] { return check_registry_roundtrip(pol); }},
  };
  for (const auto& s : config.sections)
    if (std::none_of(all.begin(), all.end(), [&](const auto& x) { return x.first == s; })) {
      std::string known;
      for (const auto& x : all) known += (known.empty() ? "" : ", ") + x.first;
      throw RegistryError("unknown check '" + s + "' (known: " + known + ")");
    }
  std::vector<std::function<Report()>> chosen;
  for (const auto& [name, fn] : all)
    if (config.sections.empty() || std::find(config.sections.begin(), config.sections.end(), name) != config.sections.end())
      chosen.push_back(fn);

  int jobs = config.jobs > 0 ? config.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, jobs);
  Report out;
  // Sections share nothing but immutable registry data, so they run in waves
  // of `jobs` tasks; results are merged in a fixed order and sorted below.
  for (std::size_t start = 0; start < chosen.size(); start += static_cast<std::size_t>(jobs)) {
    const std::size_t stop = std::min(chosen.size(), start + static_cast<std::size_t>(jobs));
    if (stop - start == 1) {
      Report r = chosen[start]();
      out.insert(out.end(), r.begin(), r.end());
      continue;
    }
    std::vector<std::future<Report>> running;
    for (std::size_t i = start; i < stop; ++i) running.push_back(std::async(std::launch::async, chosen[i]));
    for (auto& f : running) {
      Report r = f.get();
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  return out;
}

bool any_failure(const Report& r) {
  return std::any_of(r.begin(), r.end(), [](const ReportEntry& e) { return e.status == Status::fail; });
}

nlohmann::json report_json(const Report& r, const nlohmann::json& config) {
  nlohmann::json entries = nlohmann::json::array();
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& e : r) {
    (e.status == Status::pass ? pass : e.status == Status::fail ? fail : flagged)++;
    entries.push_back({{"id", e.id},
                       {"title", e.title},
                       {"status", status_name(e.status)},
                       {"orders", e.orders},
                       {"residual", e.residual},
                       {"expected", e.expected},
                       {"computed", e.computed},
                       {"note", e.note},
                       {"seconds", e.seconds}});
  }
  return {{"schema", "twistkit.report"},
          {"version", kReportSchemaVersion},
          {"config", config},
          {"summary", {{"entries", r.size()}, {"pass", pass}, {"fail", fail}, {"flagged", flagged}}},
          {"entries", entries}};
}

std::string report_text(const Report& r, bool verbose) {
  std::ostringstream os;
  int counts[3] = {0, 0, 0};
  for (const auto& e : r) {
    ++counts[static_cast<int>(e.status)];
    std::string tag = status_name(e.status);
    if (e.status == Status::fail) std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    tag.resize(8, ' ');
    os << tag << e.id;
    if (!e.orders.empty()) os << "  [" << e.orders << "]";
    os << "\n";
    if (verbose) os << "        " << e.title << "\n";
    if (e.status == Status::pass && !verbose) continue;
    if (!e.residual.empty()) os << "        residual: " << e.residual << "\n";
    if (!e.expected.empty()) os << "        expected: " << e.expected << "\n";
    if (!e.computed.empty() && (verbose || e.status != Status::pass)) os << "        computed: " << e.computed << "\n";
    if (!e.note.empty()) os << "        note: " << e.note << "\n";
  }
  os << r.size() << " entries: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " flagged\n";
  return os.str();
}

}  // namespace twistkit
