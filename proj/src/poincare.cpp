#include "twistkit/poincare.hpp"

namespace twistkit {

Element P(int mu) { return gen_element(Gen(Family::P, mu)); }
Element M(int mu, int nu) { return gen_element(lorentz(mu, nu)); }

Element p_vec_squared() {
  Element s;
  for (int i = 1; i <= 3; ++i) s.add_term({Word{Gen(Family::P, i), Gen(Family::P, i)}}, Scalar(GaussRat(1)));
  return s;
}

std::vector<Gen> poincare_generators() {
  std::vector<Gen> g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) g.emplace_back(Family::M, mu, nu);
  for (int mu = 0; mu < 4; ++mu) g.emplace_back(Family::P, mu);
  return g;
}

Element boost_function(const TruncationPolicy& policy) {
  const Gen p0(Family::P, 0);
  // κ/2 (1 − e^{−2P0/κ}) = −½ (e^{−2P0 kinv} − 1)/kinv
  Element f = expm1_over(p0, Param::kinv, -2, policy) * GaussRat(ratio(-1, 2));
  f += p_vec_squared().scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::kinv)));
  return f.truncated(policy);
}

namespace {

// [M^{μν}, M^{λσ}] = i(η^{νλ}M^{μσ} − η^{μλ}M^{νσ} − η^{νσ}M^{μλ} + η^{μσ}M^{νλ})
Element lorentz_commutator(int mu, int nu, int la, int si) {
  Element r;
  if (nu == la) r += M(mu, si) * GaussRat(eta(nu));
  if (mu == la) r -= M(nu, si) * GaussRat(eta(mu));
  if (nu == si) r -= M(mu, la) * GaussRat(eta(nu));
  if (mu == si) r += M(nu, la) * GaussRat(eta(mu));
  return r * GaussRat::i_unit();
}

// [M^{i0}, P_ρ] in the κ-deformed table.
Element boost_momentum(int i, int rho, const TruncationPolicy& policy) {
  const GaussRat I = GaussRat::i_unit();
  if (rho == 0) return P(i) * I;
  Element r;
  if (i == rho) r += boost_function(policy) * I;
  Element pp = Element::word({Word{Gen(Family::P, std::min(i, rho)), Gen(Family::P, std::max(i, rho))}});
  r -= pp.scaled(Scalar(I, ParamMono::of(Param::kinv)));
  return r.truncated(policy);
}

// [M^{ij}, P_k] = i(δ^j_k P_i − δ^i_k P_j), [M^{ij}, P_0] = 0.
Element rotation_momentum(int i, int j, int k) {
  Element r;
  if (k == 0) return r;
  if (j == k) r += P(i);
  if (i == k) r -= P(j);
  return r * GaussRat::i_unit();
}

}  // namespace

PresentationPtr kappa_poincare_algebra(const TruncationPolicy& policy) {
  auto p = std::make_shared<Presentation>("kappa-poincare", poincare_generators(), policy);
  const auto gens = poincare_generators();
  for (Gen a : gens)
    for (Gen b : gens) {
      if (!(a < b)) continue;
      Element v;
      if (a.family() == Family::M && b.family() == Family::M) {
        v = lorentz_commutator(a.i(), a.j(), b.i(), b.j());
      } else if (a.family() == Family::M && b.family() == Family::P) {
        if (a.i() == 0)
          v = -boost_momentum(a.j(), b.i(), policy);  // M^{0j} = −M^{j0}
        else
          v = rotation_momentum(a.i(), a.j(), b.i());
      }
      if (!v.is_zero()) p->set_commutator(a, b, v);
    }
  return p;
}

PresentationPtr classical_poincare_algebra(const TruncationPolicy& policy) {
  TruncationPolicy flat = policy;
  flat.set(Param::kinv, 0);
  auto k = kappa_poincare_algebra(flat);
  auto p = std::make_shared<Presentation>("poincare-classical", poincare_generators(), policy);
  for (const auto& [key, v] : k->table()) p->set_commutator(key.first, key.second, v);
  return p;
}

namespace {

HopfPresentation build_kappa_hopf(const std::string& name, PresentationPtr alg,
                                  const TruncationPolicy& policy) {
  HopfPresentation h;
  h.name = name;
  h.algebra = alg;
  const Gen p0(Family::P, 0);
  const Element e_minus = exp_series(p0, Param::kinv, -1, policy);
  const Element e_plus = exp_series(p0, Param::kinv, 1, policy);
  const Element one = Element::unit();
  const Scalar kinv = Scalar::param(Param::kinv);
  const auto& a = *alg;
  for (Gen g : alg->generators()) h.counit[g] = GaussRat();
  h.delta[p0] = tensor(P(0), one) + tensor(one, P(0));
  h.antipode[p0] = -P(0);
  for (int i = 1; i <= 3; ++i) {
    const Gen pi(Family::P, i);
    h.delta[pi] = tensor(P(i), e_minus) + tensor(one, P(i));
    h.antipode[pi] = -a.multiply(P(i), e_plus);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      const Gen m(Family::M, i, j);
      h.delta[m] = tensor(M(i, j), one) + tensor(one, M(i, j));
      h.antipode[m] = -M(i, j);
    }
  for (int i = 1; i <= 3; ++i) {
    // Stored generator is M^{0i} = −M^{i0}.
    Tensor2 d = tensor(M(i, 0), e_minus) + tensor(one, M(i, 0));
    Element s = M(i, 0);
    for (int j = 1; j <= 3; ++j) {
      if (j == i) continue;
      d -= tensor(M(i, j), P(j)).scaled(kinv);
      s += a.multiply(M(i, j), P(j)).scaled(kinv);
    }
    s = -a.multiply(s.truncated(policy), e_plus);
    const Gen m(Family::M, 0, i);
    h.delta[m] = (-d).truncated(policy);
    h.antipode[m] = (-s).truncated(policy);
  }
  for (auto& [g, d] : h.delta) d = d.truncated(policy);
  return h;
}

}  // namespace

HopfPresentation kappa_poincare(const TruncationPolicy& policy) {
  return build_kappa_hopf("kappa-poincare", kappa_poincare_algebra(policy), policy);
}

HopfPresentation classical_poincare(const TruncationPolicy& policy) {
  TruncationPolicy flat = policy;
  flat.set(Param::kinv, 0);
  HopfPresentation h = build_kappa_hopf("poincare-classical", classical_poincare_algebra(policy), flat);
  return h;
}

Tensor2 twist_exponent_xi(const TruncationPolicy& policy) {
  const Element k = expm1_over(Gen(Family::P, 0), Param::kinv, -1, policy);
  return tensor(P(3), k).scaled(Scalar(GaussRat(0, ratio(1, 2)), ParamMono::of(Param::xi)));
}

Tensor2 twist_exponent_hat() {
  return wedge(M(1, 2), P(0)).scaled(Scalar(GaussRat(0, ratio(1, 2)), ParamMono::of(Param::khinv)));
}

Tensor2 twist_exponent_flat() {
  return tensor(P(3), P(0)).scaled(Scalar(GaussRat(0, ratio(-1, 2)), ParamMono::of(Param::xi)));
}

Twist twist_xi_kappa(const Presentation& p) {
  return make_twist("F-xi-kappa", p, twist_exponent_xi(p.policy()));
}

Twist twist_hat_kappa(const Presentation& p) {
  return make_twist("F-hat-kappa", p, twist_exponent_hat());
}

HopfPresentation kappa_poincare_xi(const TruncationPolicy& policy) {
  const HopfPresentation k = kappa_poincare(policy);
  return twisted_hopf(k, twist_xi_kappa(k.alg()), "kappa-poincare-xi");
}

HopfPresentation kappa_poincare_hat(const TruncationPolicy& policy) {
  const HopfPresentation k = kappa_poincare(policy);
  return twisted_hopf(k, twist_hat_kappa(k.alg()), "kappa-poincare-hat");
}

Element kappa_casimir(bool half, const TruncationPolicy& policy) {
  const Gen p0(Family::P, 0);
  // (2κ sinh(s P0/κ))² = 2κ²(cosh(2s P0/κ) − 1) = Σ_{n≥1} 2 (2s)^{2n} kinv^{2n−2} P0^{2n}/(2n)!
  const Rational s = half ? ratio(1, 2) : Rational(1);
  Element c = monomial_series(
      p0, ParamMono::of(Param::kinv), ParamMono::of(Param::kinv, -2),
      [&](int n) {
        if (n % 2) return GaussRat();
        Rational v = 2;
        for (int k = 0; k < n; ++k) v *= 2 * s;
        return GaussRat(v / factorial(n));
      },
      2, policy);
  const Element e_plus = exp_series(p0, Param::kinv, 1, policy);
  const Element p2 = p_vec_squared();
  Element pe;
  for (const auto& [k, v] : e_plus.terms())
    for (const auto& [pk, pv] : p2.terms()) {
      Word w = k.legs[0];
      w.insert(w.end(), pk.legs[0].begin(), pk.legs[0].end());
      pe.add_term(Element::Key{{w}, k.params}, v * pv);  // P0's precede P_i in the order
    }
  return (c - pe).truncated(policy);
}

}  // namespace twistkit
