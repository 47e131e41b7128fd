#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistkit/contraction.hpp"
#include "twistkit/parser.hpp"
#include "twistkit/poincare.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/render.hpp"
#include "twistkit/suite.hpp"

using namespace twistkit;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::string> orders;
  std::string format = "text";
  std::string out;
  std::string algebra = "kappa-poincare";
  std::string twist;
  bool verbose = false;
  int jobs = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

TruncationPolicy policy_from(const std::vector<std::string>& orders) {
  TruncationPolicy pol = TruncationPolicy::defaults();
  for (const auto& o : orders) {
    const auto cut = o.find_first_of("=:");
    if (cut == std::string::npos) throw UsageError("--order expects PARAM=N, got '" + o + "'");
    const std::string name = o.substr(0, cut), value = o.substr(cut + 1);
    const auto p = param_from_name(name);
    if (!p) throw UsageError("unknown parameter '" + name + "' in --order");
    if (value == "inf") {
      pol.set(*p, TruncationPolicy::kUnbounded);
      continue;
    }
    int n = -1;
    std::istringstream is(value);
    if (!(is >> n) || !is.eof() || n < 0) throw UsageError("--order " + name + " needs a nonnegative integer or inf");
    pol.set(*p, n);
  }
  return pol;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw UsageError("cannot write " + opt.out);
  f << text;
}

int emit_report(const Options& opt, const std::string& command, const Report& rep, nlohmann::json config = {}) {
  if (opt.format == "structured") {
    if (config.is_null()) config = nlohmann::json::object();
    config["command"] = command;
    config["orders"] = policy_from(opt.orders).describe();
    emit(opt, report_json(rep, config).dump(2) + "\n");
  } else {
    emit(opt, report_text(rep, opt.verbose));
  }
  return any_failure(rep) ? kExitFail : 0;
}

Report select(const Report& rep, const std::vector<std::string>& prefixes) {
  Report out;
  for (const auto& e : rep)
    for (const auto& p : prefixes)
      if (e.id.rfind(p, 0) == 0) {
        out.push_back(e);
        break;
      }
  return out;
}

std::string show_value(const Options& opt, const ParsedValue& v) {
  if (opt.format == "structured")
    return std::visit([](const auto& t) { return render_structured(t).dump(2); }, v) + "\n";
  return render_text(v) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistkit: twisted kappa-Poincare and kappa-Galilei Hopf algebra checks"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* a) {
    a->add_option("--order", opt.orders, "truncation override PARAM=N (repeatable; N may be inf)");
    a->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    a->add_option("--out", opt.out, "write output to FILE");
    a->add_flag("-v,--verbose", opt.verbose, "show titles and computed values");
  };

  auto* ybe = app.add_subcommand("check-ybe", "Schouten brackets and Yang-Baxter equations");
  std::string rmatrix;
  ybe->add_option("--rmatrix", rmatrix, "check a single registered r-matrix");

  auto* twist = app.add_subcommand("twist", "cocycle checks and twisted coproducts/antipodes");
  twist->add_option("--twist", opt.twist, "F-xi-kappa, F-hat-kappa or F-flat");
  bool show = false;
  twist->add_flag("--show", show, "print the twisted coproduct and antipode of every generator");

  auto* star = app.add_subcommand("star", "star-product coordinate tables");
  StarOptions sopt;
  std::string kind, composition = "displayed";
  std::vector<std::string> commute;
  star->add_option("--gamma-order", sopt.gamma_order, "gamma series order")->check(CLI::Range(1, 2));
  star->add_option("--composition", composition, "composite order")->check(CLI::IsMember({"displayed", "twist_first"}));
  star->add_option("--kind", kind, "kappa, xi, hat, kappa-xi or kappa-hat (with --commutator)");
  star->add_option("--commutator", commute, "two coordinate polynomials f g: print [f,g]")->expected(2);

  auto* poisson = app.add_subcommand("poisson", "Poisson-Lie quantization against the group tables");

  auto* contract = app.add_subcommand("contract", "c -> infinity contraction checks");
  std::string cexpr;
  contract->add_option("--expr", cexpr, "contract an expression of --algebra instead of running the checks");

  auto* suite = app.add_subcommand("verify-suite", "every check, sorted by id");
  std::vector<std::string> only;
  suite->add_option("--only", only, "sections to run")->delimiter(',');
  suite->add_option("--jobs", opt.jobs, "concurrent sections (0: hardware)")->check(CLI::NonNegativeNumber);

  auto* parse = app.add_subcommand("parse", "normal form of an expression");
  std::string text;
  parse->add_option("expression", text, "expression text")->required();

  for (auto* a : {ybe, twist, star, poisson, contract, suite, parse}) add_common(a);
  for (auto* a : {twist, contract, parse}) a->add_option("--algebra", opt.algebra, "registered algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const TruncationPolicy pol = policy_from(opt.orders);
    if (*ybe) {
      if (rmatrix.empty()) return emit_report(opt, "check-ybe", check_ybe_suite());
      const LieAlgebra g = LieAlgebra::classical_poincare();
      const WedgeBivector r = registered_rmatrix(rmatrix);
      const bool modified = rmatrix == "r_kappa" || rmatrix == "r_total";
      return emit_report(opt, "check-ybe",
                         {modified ? check_mybe("ybe.mybe." + rmatrix, r, mybe_rhs(), g)
                                   : check_cybe("ybe.cybe." + rmatrix, r, g)});
    }
    if (*twist) {
      if (show) {
        if (opt.twist.empty()) throw UsageError("--show needs --twist");
        const HopfPresentation h = registered_hopf(opt.algebra, pol);
        const Twist f = registered_twist(opt.twist, h.alg());
        const HopfPresentation t = twisted_hopf(h, f, h.name + "/" + f.name);
        std::string s;
        for (Gen g : h.alg().generators()) {
          s += "Delta(" + g.name() + ") = " + render_text(t.delta.at(g)) + "\n";
          s += "S(" + g.name() + ") = " + render_text(t.antipode.at(g)) + "\n";
        }
        emit(opt, s);
        return 0;
      }
      SuiteConfig c;
      c.policy = pol;
      c.sections = {"cocycle", "twist"};
      c.jobs = 1;
      const Report all = run_verify_suite(c);
      std::vector<std::string> prefixes;
      if (opt.twist.empty() || opt.twist == "F-xi-kappa")
        for (const char* p : {"cocycle.F-xi-kappa", "twist.coproduct.xi.", "twist.antipode.xi.", "twist.u.xi"}) prefixes.emplace_back(p);
      if (opt.twist.empty() || opt.twist == "F-hat-kappa")
        for (const char* p : {"cocycle.F-hat-kappa", "twist.coproduct.hat.", "twist.antipode.hat."}) prefixes.emplace_back(p);
      if (opt.twist.empty() || opt.twist == "F-flat") prefixes.emplace_back("cocycle.F-flat");
      if (prefixes.empty()) registered_twist(opt.twist, *kappa_poincare_algebra(pol));  // throws with the known names
      return emit_report(opt, "twist", select(all, prefixes), {{"twist", opt.twist.empty() ? "all" : opt.twist}});
    }
    if (*star) {
      sopt.composition = composition == "twist_first" ? Composition::twist_first : Composition::displayed;
      if (!commute.empty()) {
        const StarOperator op = build_star_operator(star_kind_from_name(kind.empty() ? "kappa" : kind), sopt);
        const Element f = parse_element(commute[0], *coordinate_ring());
        const Element g = parse_element(commute[1], *coordinate_ring());
        emit(opt, show_value(opt, star_commutator(f, g, op)));
        return 0;
      }
      return emit_report(opt, "star", check_star_tables(sopt), {{"gamma_order", sopt.gamma_order}, {"composition", composition}});
    }
    if (*poisson) return emit_report(opt, "poisson", check_poisson_quantization());
    if (*contract) {
      if (!cexpr.empty()) {
        const PresentationPtr src = registered_algebra(opt.algebra, pol);
        const ContractionSpec spec = registered_contraction("poincare-to-galilei", pol);
        const ParsedValue v = parse_expression(cexpr, *src);
        if (const auto* e = std::get_if<Element>(&v)) {
          emit(opt, show_value(opt, contract_expression(*e, spec)));
        } else if (const auto* t = std::get_if<Tensor2>(&v)) {
          emit(opt, show_value(opt, contract_expression(*t, spec)));
        } else {
          throw UsageError("contraction of rank 3 expressions is not supported");
        }
        return 0;
      }
      return emit_report(opt, "contract", check_contraction(pol));
    }
    if (*suite) {
      SuiteConfig c;
      c.policy = pol;
      c.sections = only;
      c.jobs = opt.jobs;
      nlohmann::json cfg = {{"sections", only.empty() ? suite_sections() : only}};
      return emit_report(opt, "verify-suite", run_verify_suite(c), cfg);
    }
    if (*parse) {
      emit(opt, show_value(opt, parse_expression(text, *registered_algebra(opt.algebra, pol))));
      return 0;
    }
  } catch (const DivergentLimit& e) {
    std::cerr << "error: " << e.what() << "\n  divergent terms: " << e.offending() << "\n";
    return kExitFail;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RegistryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
