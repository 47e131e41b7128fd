#include "twistkit/registry.hpp"

#include "twistkit/parser.hpp"
#include "twistkit/poincare.hpp"
#include "twistkit/render.hpp"
#include "twistkit/star.hpp"

namespace twistkit {

namespace {

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

[[noreturn]] void unknown(const std::string& kind, const std::string& name, const std::vector<std::string>& known) {
  throw RegistryError("unknown " + kind + " '" + name + "' (known: " + joined(known) + ")");
}

template <std::size_t R>
void roundtrip(const std::string& what, const Tensor<R>& t, const Presentation& p, std::vector<std::string>& bad) {
  const std::string text = render_text(t);
  try {
    const ParsedValue back = parse_expression(text, p);
    const auto* same = std::get_if<Tensor<R>>(&back);
    if (!same && t.is_zero() && R > 1) return;  // "0" parses as a rank-1 zero
    if (!same || *same != t) bad.push_back(what + ": " + text + " -> " + render_text(back));
  } catch (const Error& e) {
    bad.push_back(what + ": " + text + " -> " + e.what());
  }
}

void roundtrip_table(const std::string& what, const CommutatorTable& t, const Presentation& p,
                     std::vector<std::string>& bad) {
  for (const auto& [k, v] : t)
    roundtrip(what + " [" + k.first.name() + "," + k.second.name() + "]", v, p, bad);
}

}  // namespace

std::vector<std::string> hopf_names() {
  return {"poincare-classical", "kappa-poincare",  "kappa-poincare-xi", "kappa-poincare-hat",
          "kappa-galilei",      "kappa-galilei-xi", "kappa-galilei-hat"};
}

HopfPresentation registered_hopf(const std::string& name, const TruncationPolicy& policy) {
  if (name == "poincare-classical") return classical_poincare(policy);
  if (name == "kappa-poincare") return kappa_poincare(policy);
  if (name == "kappa-poincare-xi") return kappa_poincare_xi(policy);
  if (name == "kappa-poincare-hat") return kappa_poincare_hat(policy);
  if (name == "kappa-galilei") return kappa_galilei(policy);
  if (name == "kappa-galilei-xi") return kappa_galilei_xi(policy);
  if (name == "kappa-galilei-hat") return kappa_galilei_hat(policy);
  unknown("Hopf algebra", name, hopf_names());
}

std::vector<std::string> algebra_names() {
  auto v = hopf_names();
  for (const char* s : {"coordinates", "poincare-group", "galilei-group"}) v.emplace_back(s);
  return v;
}

PresentationPtr registered_algebra(const std::string& name, const TruncationPolicy& policy) {
  if (name == "coordinates") return coordinate_ring();
  if (name == "poincare-group") return group_ring();
  if (name == "galilei-group") return galilei_group_ring();
  // Twisted algebras share the multiplication of their base.
  if (name == "kappa-poincare-xi" || name == "kappa-poincare-hat") return kappa_poincare_algebra(policy);
  for (const auto& h : hopf_names())
    if (h == name) return registered_hopf(name, policy).algebra;
  unknown("algebra", name, algebra_names());
}

std::vector<std::string> twist_names() { return {"F-xi-kappa", "F-hat-kappa", "F-flat"}; }

Twist registered_twist(const std::string& name, const Presentation& p) {
  if (name == "F-xi-kappa") return twist_xi_kappa(p);
  if (name == "F-hat-kappa") return twist_hat_kappa(p);
  if (name == "F-flat") return make_twist("F-flat", p, twist_exponent_flat());
  unknown("twist", name, twist_names());
}

std::vector<std::string> rmatrix_names() { return {"r_kappa", "r_kappa_hat", "r_xi", "r_total"}; }

WedgeBivector registered_rmatrix(const std::string& name) {
  if (name == "r_kappa") return r_kappa();
  if (name == "r_kappa_hat") return r_kappa_hat();
  if (name == "r_xi") return r_xi();
  if (name == "r_total") return r_kappa() + r_kappa_hat() + r_xi();
  unknown("r-matrix", name, rmatrix_names());
}

std::vector<std::string> contraction_names() { return {"poincare-to-galilei"}; }

ContractionSpec registered_contraction(const std::string& name, const TruncationPolicy& policy) {
  if (name == "poincare-to-galilei") return galilei_contraction(policy);
  unknown("contraction", name, contraction_names());
}

std::vector<std::string> registry_roundtrip_failures(const TruncationPolicy& policy) {
  std::vector<std::string> bad;
  for (const auto& name : hopf_names()) {
    const HopfPresentation h = registered_hopf(name, policy);
    const Presentation& p = h.alg();
    for (const auto& [k, v] : p.table())
      roundtrip(name + " [" + k.first.name() + "," + k.second.name() + "]", v, p, bad);
    for (const auto& [g, d] : h.delta) roundtrip(name + " Delta(" + g.name() + ")", d, p, bad);
    for (const auto& [g, s] : h.antipode) roundtrip(name + " S(" + g.name() + ")", s, p, bad);
  }
  const PresentationPtr k = kappa_poincare_algebra(policy);
  for (const auto& name : twist_names()) {
    const Twist f = registered_twist(name, *k);
    roundtrip(name + " exponent", f.exponent, *k, bad);
    roundtrip(name + " F", f.F, *k, bad);
    roundtrip(name + " F^-1", f.F_inv, *k, bad);
  }
  const PresentationPtr classical = classical_poincare_algebra(policy);
  for (const auto& name : rmatrix_names()) roundtrip(name, registered_rmatrix(name).tensor(), *classical, bad);
  roundtrip("mybe rhs", mybe_rhs().tensor(), *classical, bad);

  roundtrip_table("kappa group", kappa_group_reference(), *group_ring(), bad);
  roundtrip_table("extended group", extended_group_reference(), *group_ring(), bad);
  for (bool standard : {true, false}) {
    const GroupHopfTable g = group_hopf(standard);
    const std::string tag = standard ? "group (standard)" : "group (printed)";
    for (const auto& [x, d] : g.coproduct) roundtrip(tag + " Delta(" + x.name() + ")", d, *group_ring(), bad);
    for (const auto& [x, s] : g.antipode) roundtrip(tag + " S(" + x.name() + ")", s, *group_ring(), bad);
  }
  roundtrip_table("galilei group", galilei_group_reference(), *galilei_group_ring(), bad);
  for (const auto& [x, d] : galilei_group_coproduct_reference())
    roundtrip("galilei group Delta(" + x.name() + ")", d, *galilei_group_ring(), bad);
  const HopfPresentation kg = kappa_galilei(policy);
  roundtrip_table("galilei algebra (printed)", galilei_algebra_reference(), kg.alg(), bad);
  for (const auto& [g, img] : galilei_contraction(policy).map.generators)
    roundtrip("contraction image of " + g.name(), img, kg.alg(), bad);
  return bad;
}

}  // namespace twistkit
