#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance run.

#include <algorithm>
#include <array>
#include <string>

#include "support.hpp"
#include "twistkit/contraction.hpp"
#include "twistkit/parser.hpp"
#include "twistkit/poincare.hpp"
#include "twistkit/poisson.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/render.hpp"
#include "twistkit/rmatrix.hpp"

namespace testing_support {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first;  // description of the first failing case

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok(int min_cases = kCases) const { return failures == 0 && cases >= min_cases; }
};

inline const std::vector<std::pair<Param, std::pair<int, int>>>& kappa_ranges() {
  static const std::vector<std::pair<Param, std::pair<int, int>>> r = {
      {Param::kinv, {0, 2}}, {Param::xi, {0, 1}}, {Param::khinv, {0, 1}}};
  return r;
}

// w·u·v reduced in three orders must give one normal form, itself a fixed point.
inline PropertyResult confluence_property(unsigned seed = 101, int n_cases = kCases) {
  Random rnd(seed);
  const TruncationPolicy pol = TruncationPolicy::defaults();
  const PresentationPtr algebras[] = {kappa_poincare_algebra(pol), kappa_galilei(pol).algebra};
  PropertyResult res;
  for (int n = 0; n < n_cases; ++n) {
    const Presentation& p = *algebras[n % 2];
    const Element w = Element::word({rnd.word(p.generators(), 4)});
    const Element u = Element::word({rnd.word(p.generators(), 4)});
    const Element v = Element::word({rnd.word(p.generators(), 4)});
    const Element left = p.normal_order(concat(p.normal_order(concat(w, u)), v));
    const Element right = p.normal_order(concat(w, p.normal_order(concat(u, v))));
    const Element direct = p.normal_order(concat(concat(w, u), v));
    res.record(left == right && left == direct && p.normal_order(direct) == direct,
               render_text(w) + " | " + render_text(u) + " | " + render_text(v));
  }
  return res;
}

inline PropertyResult algebra_jacobi_property(unsigned seed = 202, int n_cases = kCases) {
  Random rnd(seed);
  const TruncationPolicy pol = TruncationPolicy::defaults();
  const PresentationPtr algebras[] = {kappa_poincare_algebra(pol), kappa_galilei(pol).algebra,
                                      classical_poincare_algebra(pol)};
  PropertyResult res;
  for (int n = 0; n < n_cases; ++n) {
    const Presentation& p = *algebras[n % 3];
    const Element a = p.normal_order(rnd.raw_element(p, 2, 2, kappa_ranges()));
    const Element b = p.normal_order(rnd.raw_element(p, 2, 2, kappa_ranges()));
    const Element c = p.normal_order(rnd.raw_element(p, 1, 2));
    const Element jac = p.commutator(a, p.commutator(b, c)) + p.commutator(b, p.commutator(c, a)) +
                        p.commutator(c, p.commutator(a, b));
    res.record(jac.is_zero(), render_text(jac));
  }
  return res;
}

// The bracket is built from fields tangent to the group, so the Jacobiator is
// checked after restriction to the group: evaluated at rational group points.
inline PropertyResult poisson_jacobi_property(unsigned seed = 303, int n_cases = kCases) {
  Random rnd(seed);
  const auto gens = group_generators();
  const WedgeBivector rs[] = {registered_rmatrix("r_total"), r_kappa(), r_xi(), r_kappa_hat()};
  auto poly = [&] {
    Element e;
    const int terms = rnd.uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
      Word w;
      const int deg = rnd.uniform(1, 2);
      for (int k = 0; k < deg; ++k) w.push_back(gens[static_cast<std::size_t>(rnd.uniform(0, 19))]);
      std::sort(w.begin(), w.end());
      e.add_term({w}, Scalar(GaussRat(rnd.rational())));
    }
    return e;
  };
  PropertyResult res;
  for (int n = 0; n < n_cases; ++n) {
    const WedgeBivector& r = rs[n % 4];
    const Element f = poly(), g = poly(), h = poly();
    const Element jac = sklyanin_bracket(f, sklyanin_bracket(g, h, r), r) +
                        sklyanin_bracket(g, sklyanin_bracket(h, f, r), r) +
                        sklyanin_bracket(h, sklyanin_bracket(f, g, r), r);
    std::array<Rational, 6> s;
    for (auto& x : s) x = rnd.rational(3);
    std::array<Rational, 4> a;
    for (auto& x : a) x = rnd.rational(3);
    res.record(evaluate(jac, cayley_point(s, a)).is_zero(),
               render_text(f) + " | " + render_text(g) + " | " + render_text(h));
  }
  return res;
}

inline PropertyResult schouten_symmetry_property(unsigned seed = 404, int n_cases = kCases) {
  Random rnd(seed);
  const LieAlgebra g = LieAlgebra::classical_poincare();
  const auto& basis = g.basis();
  auto bivector = [&] {
    Tensor2 t;
    const int terms = rnd.uniform(1, 3);
    for (int k = 0; k < terms; ++k) {
      const Gen a = basis[static_cast<std::size_t>(rnd.uniform(0, static_cast<int>(basis.size()) - 1))];
      const Gen b = basis[static_cast<std::size_t>(rnd.uniform(0, static_cast<int>(basis.size()) - 1))];
      t += wedge(gen_element(a), gen_element(b)) * GaussRat(rnd.rational());
    }
    return WedgeBivector(t);
  };
  PropertyResult res;
  for (int n = 0; n < n_cases; ++n) {
    const WedgeBivector r1 = bivector(), r2 = bivector();
    const WedgeTrivector s12 = schouten(r1, r2, g);
    const WedgeTrivector s21 = schouten(r2, r1, g);
    bool ok = s12 == s21;
    // independent routes for each one-sided piece
    ok = ok && schouten_leg_form(r1, r2, g) == schouten_component_form(r1, r2, g);
    ok = ok && schouten_leg_form(r2, r1, g) == schouten_component_form(r2, r1, g);
    // polarization ties the mixed bracket to the diagonal ones
    ok = ok && schouten(r1 + r2, r1 + r2, g) == schouten(r1, r1, g) + schouten(r2, r2, g) + s12 + s12;
    const Scalar k(GaussRat(rnd.rational()));
    ok = ok && schouten(r1.scaled(k), r2, g) == WedgeTrivector(s12.tensor().scaled(k));
    res.record(ok, render_text(r1.tensor()) + " | " + render_text(r2.tensor()));
  }
  return res;
}

inline PropertyResult parser_roundtrip_property(unsigned seed = 505, int n_cases = kCases) {
  Random rnd(seed);
  const TruncationPolicy pol = TruncationPolicy::defaults();
  const std::vector<std::string> names = {"kappa-poincare", "kappa-galilei", "coordinates", "poincare-group",
                                          "galilei-group"};
  const std::vector<std::pair<Param, std::pair<int, int>>> ranges = {
      {Param::kinv, {0, 4}}, {Param::xi, {0, 2}}, {Param::khinv, {0, 3}}, {Param::c, {-3, 2}}, {Param::kbar_inv, {0, 2}}};
  PropertyResult res;
  for (int n = 0; n < n_cases; ++n) {
    const PresentationPtr p = registered_algebra(names[static_cast<std::size_t>(n) % names.size()], pol);
    const int terms = rnd.uniform(1, 4);
    std::string text;
    bool ok = false;
    try {
      switch (n % 3) {
        case 0: {
          const Element e = p->normal_order(rnd.raw_element(*p, terms, 3, ranges));
          text = render_text(e);
          ok = parse_element(text, *p) == e;
          break;
        }
        case 1: {
          const Tensor2 t = p->normal_order(rnd.raw_tensor<2>(*p, terms, 2, ranges));
          text = render_text(t);
          ok = parse_tensor2(text, *p) == t;
          break;
        }
        default: {
          const Tensor3 t = p->normal_order(rnd.raw_tensor<3>(*p, terms, 2, ranges));
          text = render_text(t);
          ok = parse_tensor3(text, *p) == t;
        }
      }
    } catch (const Error& e) {
      text += std::string(" threw ") + e.what();
    }
    res.record(ok, text);
  }
  return res;
}

}  // namespace testing_support
