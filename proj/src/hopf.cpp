#include "twistkit/hopf.hpp"

#include <chrono>

#include "twistkit/render.hpp"

namespace twistkit {

namespace {

Tensor2 coproduct_word(const HopfPresentation& h, const Word& w) {
  Tensor2 acc = Tensor2::unit();
  for (Gen g : w) {
    auto it = h.delta.find(g);
    if (it == h.delta.end()) throw UnknownGenerator("no coproduct for " + g.name() + " in " + h.name);
    acc = h.alg().multiply(acc, it->second);
  }
  return acc;
}

Element antipode_word(const HopfPresentation& h, const Word& w) {
  Element acc = Element::unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto s = h.antipode.find(*it);
    if (s == h.antipode.end()) throw UnknownGenerator("no antipode for " + it->name() + " in " + h.name);
    acc = h.alg().multiply(acc, s->second);
  }
  return acc;
}

}  // namespace

Tensor2 coproduct(const HopfPresentation& h, const Element& e) {
  Tensor2 out;
  for (const auto& [k, v] : e.terms()) out += coproduct_word(h, k.legs[0]).scaled(Scalar(v, k.params));
  return out.truncated(h.alg().policy());
}

Tensor3 coproduct_left(const HopfPresentation& h, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, v] : t.terms()) {
    const Tensor2 d = coproduct_word(h, k.legs[0]);
    for (const auto& [dk, dv] : d.terms())
      out.add_term(Tensor3::Key{{dk.legs[0], dk.legs[1], k.legs[1]}, dk.params * k.params}, dv * v);
  }
  return out.truncated(h.alg().policy());
}

Tensor3 coproduct_right(const HopfPresentation& h, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, v] : t.terms()) {
    const Tensor2 d = coproduct_word(h, k.legs[1]);
    for (const auto& [dk, dv] : d.terms())
      out.add_term(Tensor3::Key{{k.legs[0], dk.legs[0], dk.legs[1]}, dk.params * k.params}, dv * v);
  }
  return out.truncated(h.alg().policy());
}

Element antipode(const HopfPresentation& h, const Element& e) {
  Element out;
  for (const auto& [k, v] : e.terms()) out += antipode_word(h, k.legs[0]).scaled(Scalar(v, k.params));
  return out.truncated(h.alg().policy());
}

GaussRat counit(const HopfPresentation& h, const Word& w) {
  GaussRat acc(1);
  for (Gen g : w) {
    auto it = h.counit.find(g);
    if (it == h.counit.end()) throw UnknownGenerator("no counit for " + g.name() + " in " + h.name);
    acc *= it->second;
    if (acc.is_zero()) break;
  }
  return acc;
}

Element counit_left(const HopfPresentation& h, const Tensor2& t) {
  Element out;
  for (const auto& [k, v] : t.terms())
    out.add_term(Element::Key{{k.legs[1]}, k.params}, v * counit(h, k.legs[0]));
  return out;
}

Element counit_right(const HopfPresentation& h, const Tensor2& t) {
  Element out;
  for (const auto& [k, v] : t.terms())
    out.add_term(Element::Key{{k.legs[0]}, k.params}, v * counit(h, k.legs[1]));
  return out;
}

Twist make_twist(const std::string& name, const Presentation& p, const Tensor2& exponent) {
  Twist f;
  f.name = name;
  f.exponent = exponent.truncated(p.policy());
  f.F = exp_tensor(p, f.exponent);
  f.F_inv = exp_tensor(p, -f.exponent);
  return f;
}

Tensor2 twist_conjugate(const Presentation& p, const Twist& f, const Tensor2& t) {
  return adjoint_exp(p, f.exponent, t);
}

Tensor2 twisted_coproduct(const HopfPresentation& h, const Twist& f, Gen g) {
  auto it = h.delta.find(g);
  if (it == h.delta.end()) throw UnknownGenerator("no coproduct for " + g.name());
  return twist_conjugate(h.alg(), f, it->second);
}

Element compute_u(const HopfPresentation& h, const Twist& f) {
  Element out;
  for (const auto& [k, v] : f.F.terms()) {
    const Element s = antipode_word(h, k.legs[1]);
    out += h.alg().multiply(Element::word({k.legs[0]}), s).scaled(Scalar(v, k.params));
  }
  return out.truncated(h.alg().policy());
}

Element compute_u_inverse(const HopfPresentation& h, const Twist& f) {
  Element out;
  for (const auto& [k, v] : f.F_inv.terms()) {
    const Element s = antipode_word(h, k.legs[0]);
    out += h.alg().multiply(s, Element::word({k.legs[1]})).scaled(Scalar(v, k.params));
  }
  return out.truncated(h.alg().policy());
}

Element twisted_antipode(const HopfPresentation& h, const Element& u, const Element& u_inv, Gen g) {
  auto it = h.antipode.find(g);
  if (it == h.antipode.end()) throw UnknownGenerator("no antipode for " + g.name());
  const auto& p = h.alg();
  return p.multiply(p.multiply(u, it->second), u_inv);
}

HopfPresentation twisted_hopf(const HopfPresentation& h, const Twist& f, const std::string& name) {
  HopfPresentation out;
  out.name = name;
  out.algebra = h.algebra;
  out.counit = h.counit;
  const Element u = compute_u(h, f);
  const Element u_inv = series_inverse(h.alg(), u);
  for (const auto& [g, d] : h.delta) out.delta[g] = twist_conjugate(h.alg(), f, d);
  for (const auto& [g, s] : h.antipode) out.antipode[g] = twisted_antipode(h, u, u_inv, g);
  return out;
}

HopfPresentation degenerate(const HopfPresentation& h, Param p, const std::string& name) {
  auto alg = std::make_shared<Presentation>(name, h.alg().generators(), h.alg().policy());
  for (const auto& [k, v] : h.alg().table()) {
    Element z = v.with_param_zero(p);
    if (!z.is_zero()) alg->set_commutator(k.first, k.second, z);
  }
  HopfPresentation out;
  out.name = name;
  out.algebra = alg;
  out.counit = h.counit;
  for (const auto& [g, d] : h.delta) out.delta[g] = d.with_param_zero(p);
  for (const auto& [g, s] : h.antipode) out.antipode[g] = s.with_param_zero(p);
  return out;
}

CocycleResult check_cocycle(const HopfPresentation& h, const Twist& f) {
  const auto& p = h.alg();
  CocycleResult r;
  r.orders = p.policy().describe();
  const Tensor3 f12 = tensor(f.F, Element::unit());
  const Tensor3 f23 = tensor(Element::unit(), f.F);
  const Tensor3 lhs = p.multiply(f12, coproduct_left(h, f.F));
  const Tensor3 rhs = p.multiply(f23, coproduct_right(h, f.F));
  r.residual = lhs - rhs;
  r.normalization_left = counit_left(h, f.F) - Element::unit();
  r.normalization_right = counit_right(h, f.F) - Element::unit();
  return r;
}

namespace {

ReportEntry entry(const std::string& id, const std::string& title, const std::string& orders,
                  const std::string& residual) {
  ReportEntry e;
  e.id = id;
  e.title = title;
  e.orders = orders;
  e.residual = residual;
  e.status = residual.empty() ? Status::pass : Status::fail;
  return e;
}

template <std::size_t R>
std::string residual_text(const Tensor<R>& t) {
  return t.is_zero() ? std::string() : render_text(t);
}

}  // namespace

Report check_hopf_axioms(const HopfPresentation& h) {
  Report rep;
  const auto& p = h.alg();
  const std::string orders = p.policy().describe();
  const std::string base = "hopf." + h.name + ".";
  for (Gen g : p.generators()) {
    const auto t0 = std::chrono::steady_clock::now();
    const Tensor2& d = h.delta.at(g);
    const Tensor3 coassoc = coproduct_left(h, d) - coproduct_right(h, d);
    const Element x = gen_element(g);
    const Element cl = counit_left(h, d) - x;
    const Element cr = counit_right(h, d) - x;
    Element sl, sr;
    for (const auto& [k, v] : d.terms()) {
      sl += p.multiply(antipode_word(h, k.legs[0]), Element::word({k.legs[1]})).scaled(Scalar(v, k.params));
      sr += p.multiply(Element::word({k.legs[0]}), antipode_word(h, k.legs[1])).scaled(Scalar(v, k.params));
    }
    const Element eps = Element::unit() * h.counit.at(g);
    sl = (sl - eps).truncated(p.policy());
    sr = (sr - eps).truncated(p.policy());
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.push_back(entry(base + "coassociativity." + g.name(), "(Δ⊗1)Δ = (1⊗Δ)Δ on " + g.name(), orders,
                        residual_text(coassoc)));
    rep.back().seconds = dt;
    std::string cres = residual_text(cl);
    if (cres.empty()) cres = residual_text(cr);
    rep.push_back(entry(base + "counit." + g.name(), "(ε⊗1)Δ = (1⊗ε)Δ = id on " + g.name(), orders, cres));
    std::string sres = residual_text(sl);
    if (sres.empty()) sres = residual_text(sr);
    rep.push_back(entry(base + "antipode." + g.name(), "m(S⊗1)Δ = m(1⊗S)Δ = ε on " + g.name(), orders, sres));
  }
  const auto& gens = p.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Gen g = gens[a], k = gens[b];
      const Tensor2 lhs = coproduct(h, p.table_commutator(g, k));
      const Tensor2 rhs = p.commutator(h.delta.at(g), h.delta.at(k));
      rep.push_back(entry(base + "homomorphism." + g.name() + "," + k.name(),
                          "Δ[" + g.name() + "," + k.name() + "] = [Δ" + g.name() + ",Δ" + k.name() + "]",
                          orders, residual_text(lhs - rhs)));
    }
  return rep;
}

std::map<Gen, Element> centrality_residuals(const HopfPresentation& h, const Element& e) {
  std::map<Gen, Element> out;
  for (Gen g : h.alg().generators()) out[g] = h.alg().commutator(e, gen_element(g));
  return out;
}

}  // namespace twistkit
