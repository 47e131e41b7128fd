#include "twistkit/contraction.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "twistkit/poincare.hpp"
#include "twistkit/render.hpp"

namespace twistkit {

namespace {

Gen v_gen(int i) { return Gen(Family::V, i); }
Gen pi_gen(int mu) { return Gen(Family::Pi, mu); }

Scalar cpow(int e, const GaussRat& v = GaussRat(1)) { return Scalar(v, ParamMono::of(Param::c, e)); }

Scalar inverse(const Scalar& s) { return Scalar(GaussRat(1) / s.value, s.params.inverse()); }

// Rescaled values live here before the limit: Galilei generators, no relations
// needed because the generator map preserves the order.
const Presentation& staging() {
  static const PresentationPtr p = [] {
    std::vector<Gen> g = galilei_generators();
    for (Gen x : galilei_group_generators()) g.push_back(x);
    return std::make_shared<const Presentation>("galilei-staging", g, TruncationPolicy::unbounded());
  }();
  return *p;
}

// g = s * g' for a single-generator image.
std::pair<Gen, Scalar> image_of(const ContractionSpec& spec, Gen g) {
  auto it = spec.map.generators.find(g);
  if (it == spec.map.generators.end()) throw UnknownGenerator("contraction " + spec.name + " has no image for " + g.name());
  const auto& terms = it->second.terms();
  if (terms.size() != 1 || terms.begin()->first.legs[0].size() != 1)
    throw Error("contraction image of " + g.name() + " is not a rescaled generator");
  const auto& [k, v] = *terms.begin();
  return {k.legs[0][0], Scalar(v, k.params)};
}

template <std::size_t R>
std::string offending_terms(const Tensor<R>& e) {
  Tensor<R> bad = e.filtered([](const ParamMono& m) { return m[Param::c] > 0; });
  return render_text(bad);
}

}  // namespace

ContractionSpec galilei_contraction(const TruncationPolicy& source) {
  ContractionSpec s;
  s.name = "poincare-to-galilei";
  for (int i = 1; i <= 3; ++i) {
    // M^{i0} = c V^i and the stored generator is M^{0i} = −M^{i0}.
    s.map.generators[Gen(Family::M, 0, i)] = gen_element(v_gen(i), cpow(1, GaussRat(-1)));
    s.map.generators[Gen(Family::P, i)] = gen_element(pi_gen(i));
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) s.map.generators[Gen(Family::M, i, j)] = gen_element(Gen(Family::K, i, j));
  s.map.generators[Gen(Family::P, 0)] = gen_element(pi_gen(0), cpow(-1));
  s.map.params[Param::kinv] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::kbar_inv));
  s.map.params[Param::xi] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::xibar));
  s.map.params[Param::khinv] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::khbar_inv));
  s.map.strict = true;
  s.target_generators = galilei_generators();
  TruncationPolicy t = TruncationPolicy::unbounded();
  t.set(Param::kbar_inv, source.max_degree(Param::kinv));
  t.set(Param::khbar_inv, source.max_degree(Param::khinv));
  t.set(Param::xibar, source.max_degree(Param::xi));
  s.target_policy = t;
  return s;
}

std::vector<Gen> galilei_generators() {
  std::vector<Gen> g;
  for (int i = 1; i <= 3; ++i) g.push_back(v_gen(i));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) g.emplace_back(Family::K, i, j);
  for (int mu = 0; mu < 4; ++mu) g.push_back(pi_gen(mu));
  return g;
}

Element V(int i) { return gen_element(v_gen(i)); }
Element K(int i, int j) { return gen_element(galilei_rotation(i, j)); }
Element Pi(int mu) { return gen_element(pi_gen(mu)); }

template <std::size_t R>
Tensor<R> c_limit(const Tensor<R>& e, const std::string& what) {
  Tensor<R> out;
  bool divergent = false;
  for (const auto& [k, v] : e.terms()) {
    const int ce = k.params[Param::c];
    if (ce > 0) divergent = true;
    if (ce != 0) continue;
    auto key = k;
    key.params.set(Param::c, 0);
    out.add_term(key, v);
  }
  if (divergent) throw DivergentLimit("positive powers of c survive in " + what, offending_terms(e));
  return out;
}

template Element c_limit(const Element&, const std::string&);
template Tensor2 c_limit(const Tensor2&, const std::string&);
template Tensor3 c_limit(const Tensor3&, const std::string&);

Element rescale(const Element& e, const ContractionSpec& spec) { return substitute(e, spec.map, staging()); }
Tensor2 rescale(const Tensor2& e, const ContractionSpec& spec) { return substitute(e, spec.map, staging()); }

Element contract_expression(const Element& e, const ContractionSpec& spec) {
  return c_limit(rescale(e, spec), render_text(e)).truncated(spec.target_policy);
}

Tensor2 contract_expression(const Tensor2& e, const ContractionSpec& spec) {
  return c_limit(rescale(e, spec), render_text(e)).truncated(spec.target_policy);
}

HopfPresentation contract_presentation(const HopfPresentation& h, const ContractionSpec& spec,
                                       const std::string& name) {
  auto alg = std::make_shared<Presentation>(name, spec.target_generators, spec.target_policy);
  HopfPresentation out;
  out.name = name;

  std::vector<std::pair<std::pair<Gen, Gen>, std::future<Element>>> table;
  for (const auto& [key, value] : h.alg().table()) {
    const auto [g, sg] = image_of(spec, key.first);
    const auto [k, sk] = image_of(spec, key.second);
    const std::string what = "[" + g.name() + "," + k.name() + "]";
    table.emplace_back(std::pair{g, k}, std::async(std::launch::async, [&spec, value, s = inverse(sg * sk), what] {
                         return c_limit(rescale(value, spec).scaled(s), what).truncated(spec.target_policy);
                       }));
  }
  std::vector<std::pair<Gen, std::future<Tensor2>>> deltas;
  std::vector<std::pair<Gen, std::future<Element>>> antipodes;
  for (const auto& [g, d] : h.delta) {
    const auto [t, s] = image_of(spec, g);
    deltas.emplace_back(t, std::async(std::launch::async, [&spec, d = d, s = inverse(s), t = t] {
                          return c_limit(rescale(d, spec).scaled(s), "Delta(" + t.name() + ")")
                              .truncated(spec.target_policy);
                        }));
    const Element& a = h.antipode.at(g);
    antipodes.emplace_back(t, std::async(std::launch::async, [&spec, a, s = inverse(s), t = t] {
                             return c_limit(rescale(a, spec).scaled(s), "S(" + t.name() + ")")
                                 .truncated(spec.target_policy);
                           }));
    out.counit[t] = h.counit.at(g);
  }
  for (auto& [k, f] : table) {
    Element v = f.get();
    if (!v.is_zero()) alg->set_commutator(k.first, k.second, v);
  }
  for (auto& [g, f] : deltas) out.delta[g] = f.get();
  for (auto& [g, f] : antipodes) out.antipode[g] = f.get();
  out.algebra = alg;
  return out;
}

// ---------------------------------------------------------------------------
// group coordinates

PresentationPtr galilei_group_ring() {
  static const PresentationPtr ring = std::make_shared<const Presentation>(
      "galilei-group-functions", galilei_group_generators(), TruncationPolicy::unbounded());
  return ring;
}

std::vector<Gen> galilei_group_generators() {
  std::vector<Gen> g;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) g.emplace_back(Family::R, i, j);
  for (int i = 1; i <= 3; ++i) g.emplace_back(Family::v, i);
  g.emplace_back(Family::tau);
  for (int i = 1; i <= 3; ++i) g.emplace_back(Family::b, i);
  return g;
}

namespace {

Gen rot_gen(int i, int j) { return Gen(Family::R, i, j); }
Gen vel_gen(int i) { return Gen(Family::v, i); }
Gen b_gen(int i) { return Gen(Family::b, i); }
const Gen kTau(Family::tau);

Element Rg(int i, int j) { return gen_element(rot_gen(i, j)); }
Element vg(int i) { return gen_element(vel_gen(i)); }
Element bg(int i) { return gen_element(b_gen(i)); }
Element taug() { return gen_element(kTau); }

Element gmul(const Element& a, const Element& b) { return galilei_group_ring()->multiply(a, b); }
Element pmul(const Element& a, const Element& b) { return group_ring()->multiply(a, b); }

Element v_squared() {
  Element s;
  for (int k = 1; k <= 3; ++k) s += gmul(vg(k), vg(k));
  return s;
}

// Σ_k v^k R^k_i
Element v_dot_rot(int i) {
  Element s;
  for (int k = 1; k <= 3; ++k) s += gmul(vg(k), Rg(k, i));
  return s;
}

Element power(const Element& x, int n, Element (*mul)(const Element&, const Element&)) {
  Element r = Element::unit();
  for (int k = 0; k < n; ++k) r = mul(r, x);
  return r;
}

int factor_degree(Gen g) {
  if (g.family() == Family::Lam) {
    if (g.i() == 0 && g.j() == 0) return 0;
    return (g.i() == 0 || g.j() == 0) ? -1 : 0;
  }
  if (g.family() == Family::a) return g.i() == 0 ? 1 : 0;
  throw UnknownGenerator("no c-degree for " + g.name());
}

int param_degree(const ParamMono& m) {
  return m[Param::kinv] + m[Param::khinv] + m[Param::xi] + m[Param::c];
}

constexpr int kNoTerms = -1000000;

template <std::size_t R>
int degree_bound(const Tensor<R>& f) {
  int best = kNoTerms;
  for (const auto& [k, v] : f.terms()) {
    int d = param_degree(k.params);
    for (const auto& w : k.legs)
      for (Gen g : w) d += factor_degree(g);
    best = std::max(best, d);
  }
  return best;
}

Substitution forward_map(int n) {
  Substitution s;
  s.strict = true;
  const Element v2 = v_squared();
  Element gamma;
  for (int m = 0; m <= n; ++m)
    gamma += power(v2, m, gmul).scaled(Scalar(GaussRat(binomial(ratio(1, 2), m)), ParamMono::of(Param::c, -2 * m)));
  s.generators[Gen(Family::Lam, 0, 0)] = gamma;
  for (int i = 1; i <= 3; ++i) {
    s.generators[Gen(Family::Lam, i, 0)] = vg(i).scaled(cpow(-1));
    s.generators[Gen(Family::Lam, 0, i)] = v_dot_rot(i).scaled(cpow(-1));
    for (int k = 1; k <= 3; ++k) {
      Element x = Rg(k, i);
      const Element vvR = gmul(vg(k), v_dot_rot(i));
      for (int m = 1; m <= n; ++m)
        x += gmul(power(v2, m - 1, gmul), vvR)
                 .scaled(Scalar(GaussRat(binomial(ratio(1, 2), m)), ParamMono::of(Param::c, -2 * m)));
      s.generators[Gen(Family::Lam, k, i)] = x;
    }
    s.generators[Gen(Family::a, i)] = bg(i);
  }
  s.generators[Gen(Family::a, 0)] = taug().scaled(cpow(1));
  s.params[Param::kinv] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::kbar_inv));
  s.params[Param::xi] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::xibar));
  s.params[Param::khinv] = Scalar(GaussRat(1), ParamMono::of(Param::c) * ParamMono::of(Param::khbar_inv));
  return s;
}

// Poincaré coordinates that the inverse image of t depends on.
std::vector<Gen> image_variables(Gen t) {
  switch (t.family()) {
    case Family::R: {
      std::vector<Gen> g{Gen(Family::Lam, t.i(), t.j())};
      for (int k = 1; k <= 3; ++k) {
        g.emplace_back(Family::Lam, k, 0);
        if (k != t.i()) g.emplace_back(Family::Lam, k, t.j());
      }
      return g;
    }
    case Family::v: return {Gen(Family::Lam, t.i(), 0)};
    case Family::tau: return {Gen(Family::a, 0)};
    case Family::b: return {Gen(Family::a, t.i())};
    default: throw UnknownGenerator(t.name() + " is not a Galilei group coordinate");
  }
}

std::string pair_name(Gen g, Gen h) { return "[" + g.name() + "," + h.name() + "]"; }

// Group coordinates satisfy RRᵀ = 1, so a positive power of c only diverges
// when its coefficient is a nonzero function on the group.
Element group_limit(const Element& e, const std::string& what) {
  std::map<int, Element> by_power;
  for (const auto& [k, v] : e.terms()) {
    auto key = k;
    key.params.set(Param::c, 0);
    by_power[k.params[Param::c]].add_term(key, v);
  }
  Element bad;
  for (const auto& [p, coef] : by_power)
    if (p > 0 && !equal_on_galilei_group(coef, {})) bad += coef.scaled(cpow(p));
  if (!bad.is_zero()) throw DivergentLimit("positive powers of c survive on the group in " + what, render_text(bad));
  return by_power[0];
}

Tensor2 group_limit(const Tensor2& e, const std::string& what) {
  // The coproduct images are polynomial in both legs; positive powers are
  // required to cancel identically there.
  return c_limit(e, what);
}

}  // namespace

Element group_inverse_image(Gen t, int n) {
  switch (t.family()) {
    case Family::R: {
      const int l = t.i(), i = t.j();
      Element s;
      for (int m = 1; m <= 3; ++m) s += pmul(Lam(m, 0), Lam(m, 0));
      Element tail;
      for (int k = 1; k <= 3; ++k) tail += pmul(pmul(Lam(l, 0), Lam(k, 0)), Lam(k, i));
      Element x = Lam(l, i);
      for (int m = 1; m <= n; ++m) x += pmul(power(s, m - 1, pmul), tail) * GaussRat(binomial(ratio(-1, 2), m));
      return x;
    }
    case Family::v: return Lam(t.i(), 0).scaled(cpow(1));
    case Family::tau: return A(0).scaled(cpow(-1));
    case Family::b: return A(t.i());
    default: throw UnknownGenerator(t.name() + " is not a Galilei group coordinate");
  }
}

Element group_forward(const Element& f, int n) { return substitute(f, forward_map(n), *galilei_group_ring()); }
Tensor2 group_forward(const Tensor2& f, int n) { return substitute(f, forward_map(n), *galilei_group_ring()); }

int c_degree_bound(const Element& f) { return degree_bound(f); }
int c_degree_bound(const Tensor2& f) { return degree_bound(f); }

CommutatorTable contract_group_table(const CommutatorTable& t) {
  const auto gens = galilei_group_generators();
  std::vector<std::pair<std::pair<Gen, Gen>, std::future<Element>>> jobs;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Gen x = gens[a], y = gens[b];
      jobs.emplace_back(std::pair{x, y}, std::async(std::launch::async, [&t, x, y] {
        // Degree counting: every image term has c-degree ≤ 0 and the order-m
        // series terms sit 2m lower, so order n leaves only negative powers
        // once n ≥ bound/2.
        int bound = kNoTerms;
        for (Gen u : image_variables(x))
          for (Gen w : image_variables(y)) {
            const Element uw = table_value(t, u, w);
            if (!uw.is_zero()) bound = std::max(bound, degree_bound(uw) - factor_degree(u) - factor_degree(w));
          }
        if (bound == kNoTerms) return Element{};
        const int n = std::max(1, bound / 2);
        const Element X = group_inverse_image(x, n), Y = group_inverse_image(y, n);
        Element raw;
        for (Gen u : image_variables(x)) {
          const Element dx = derivative(X, u);
          if (dx.is_zero()) continue;
          for (Gen w : image_variables(y)) {
            const Element uw = table_value(t, u, w);
            if (uw.is_zero()) continue;
            raw += pmul(pmul(dx, derivative(Y, w)), uw);
          }
        }
        return group_limit(group_forward(raw, n), pair_name(x, y));
      }));
    }
  CommutatorTable out;
  for (auto& [k, f] : jobs) {
    Element v = f.get();
    if (!v.is_zero()) out[k] = v;
  }
  return out;
}

std::map<Gen, Tensor2> contract_group_coproducts(const GroupHopfTable& h) {
  // Δ is an algebra map, so Δ(X) = X(ΔΛ, Δa); the coproduct never raises the
  // c-degree, hence the first order of the series already suffices.
  constexpr int n = 1;
  auto ring = group_ring();
  std::map<Gen, Tensor2> out;
  for (Gen x : galilei_group_generators()) {
    Tensor2 d;
    const Element image = group_inverse_image(x, n);
    for (const auto& [k, v] : image.terms()) {
      Tensor2 w = Tensor2::scalar(Scalar(v, k.params));
      for (Gen g : k.legs[0]) w = ring->multiply(w, h.coproduct.at(g));
      d += w;
    }
    out[x] = group_limit(group_forward(d, n), "Delta(" + x.name() + ")");
  }
  return out;
}

GalileiPoint galilei_point(const std::array<Rational, 3>& s, const std::array<Rational, 3>& v, const Rational& tau,
                           const std::array<Rational, 3>& b) {
  const GroupPoint g = cayley_point({0, 0, 0, s[0], s[1], s[2]}, {0, 0, 0, 0});
  GalileiPoint p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.rot[i][j] = g.lam[i + 1][j + 1];
  p.v = v;
  p.tau = tau;
  p.b = b;
  return p;
}

Element evaluate(const Element& f, const GalileiPoint& p) {
  Element out;
  for (const auto& [k, c] : f.terms()) {
    Rational x = 1;
    for (Gen g : k.legs[0]) switch (g.family()) {
        case Family::R: x *= p.rot[g.i() - 1][g.j() - 1]; break;
        case Family::v: x *= p.v[g.i() - 1]; break;
        case Family::tau: x *= p.tau; break;
        case Family::b: x *= p.b[g.i() - 1]; break;
        default: throw UnknownGenerator("cannot evaluate " + g.name() + " at a Galilei group point");
      }
    out.add_term(Element::Key{{Word{}}, k.params}, c * GaussRat(x));
  }
  return out;
}

bool equal_on_galilei_group(const Element& a, const Element& b) {
  static const std::vector<GalileiPoint> points = [] {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto q = [&] { return ratio(num(rng), den(rng)); };
    std::vector<GalileiPoint> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(galilei_point({q(), q(), q()}, {q(), q(), q()}, q(), {q(), q(), q()}));
    return pts;
  }();
  const Element d = a - b;
  if (d.is_zero()) return true;
  for (const auto& p : points)
    if (!evaluate(d, p).is_zero()) return false;
  return true;
}

CommutatorTable galilei_group_reference() {
  CommutatorTable t;
  auto kb = [](const Element& e, const GaussRat& s) { return e.scaled(Scalar(s, ParamMono::of(Param::kbar_inv))); };
  auto kh = [](const Element& e, const GaussRat& s) { return e.scaled(Scalar(s, ParamMono::of(Param::khbar_inv))); };
  auto xb = [](const Element& e, const GaussRat& s) { return e.scaled(Scalar(s, ParamMono::of(Param::xibar))); };
  const GaussRat mi(0, -1), one(1);
  auto d = [](int a, int b) { return a == b ? 1 : 0; };
  auto put = [&t](Gen g, Gen h, const Element& e) {
    if (!e.is_zero()) t[{g, h}] = e;
  };
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      // δ_{2l} R^k_1 − δ_{1l} R^k_2
      const Element rl = Rg(k, 1) * GaussRat(d(2, l)) - Rg(k, 2) * GaussRat(d(1, l));
      for (int i = 1; i <= 3; ++i) {
        Element e = kb(gmul(vg(k), Rg(i, l)) - v_dot_rot(l) * GaussRat(d(k, i)), mi);
        e += kh(gmul(vg(i), rl), one);
        put(rot_gen(k, l), b_gen(i), e);
      }
      const Element rk = Rg(1, l) * GaussRat(d(k, 2)) - Rg(2, l) * GaussRat(d(k, 1));
      put(rot_gen(k, l), kTau, kh(rl - rk, one));
    }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j)
      put(vel_gen(i), b_gen(j), kb(gmul(vg(i), vg(j)) - v_squared() * GaussRat(ratio(d(i, j), 2)), mi));
    put(vel_gen(i), kTau,
        kb(vg(i), mi) - kh(vg(1) * GaussRat(d(i, 2)) - vg(2) * GaussRat(d(i, 1)), one));
    Element tb = kb(bg(i), mi) + kh(bg(1) * GaussRat(d(i, 2)) - bg(2) * GaussRat(d(i, 1)), GaussRat(0, 1));
    tb += xb(Rg(i, 3) + Element::unit() * GaussRat(d(i, 3)), GaussRat(0, ratio(1, 2)));
    put(kTau, b_gen(i), tb);
    for (int j = i + 1; j <= 3; ++j)
      put(b_gen(i), b_gen(j), xb(gmul(vg(i), Rg(j, 3)) - gmul(Rg(i, 3), vg(j)), GaussRat(0, ratio(1, 2))));
  }
  return t;
}

std::map<Gen, Tensor2> galilei_group_coproduct_reference() {
  std::map<Gen, Tensor2> d;
  const Element one = Element::unit();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Tensor2 r;
      for (int k = 1; k <= 3; ++k) r += tensor(Rg(i, k), Rg(k, j));
      d[rot_gen(i, j)] = r;
    }
    Tensor2 v = tensor(vg(i), one), b = tensor(vg(i), taug()) + tensor(bg(i), one);
    for (int j = 1; j <= 3; ++j) {
      v += tensor(Rg(i, j), vg(j));
      b += tensor(Rg(i, j), bg(j));
    }
    d[vel_gen(i)] = v;
    d[b_gen(i)] = b;
  }
  d[kTau] = tensor(taug(), one) + tensor(one, taug());
  return d;
}

// ---------------------------------------------------------------------------
// registry

HopfPresentation kappa_galilei(const TruncationPolicy& source_policy) {
  return contract_presentation(kappa_poincare(source_policy), galilei_contraction(source_policy), "kappa-galilei");
}

HopfPresentation kappa_galilei_xi(const TruncationPolicy& source_policy) {
  return contract_presentation(kappa_poincare_xi(source_policy), galilei_contraction(source_policy), "kappa-galilei-xi");
}

HopfPresentation kappa_galilei_hat(const TruncationPolicy& source_policy) {
  return contract_presentation(kappa_poincare_hat(source_policy), galilei_contraction(source_policy), "kappa-galilei-hat");
}

// ---------------------------------------------------------------------------
// printed algebra

namespace {

// [g, h] as printed, for g, h in canonical form.
Element printed_algebra(Gen g, Gen h) {
  const GaussRat I = GaussRat::i_unit();
  const Family fg = g.family(), fh = h.family();
  if (fg == Family::K && fh == Family::K) {
    const int i = g.i(), j = g.j(), k = h.i(), l = h.j();
    Element r;
    if (i == l) r += K(j, k);
    if (j == l) r -= K(i, k);
    if (j == k) r += K(i, l);
    if (i == k) r -= K(j, l);
    return r * I;
  }
  if (fg == Family::K && fh == Family::V) {
    const int i = g.i(), j = g.j(), k = h.i();
    Element r;
    if (j == k) r += V(i);
    if (i == k) r -= V(j);
    return r * I;
  }
  if (fg == Family::K && fh == Family::Pi) {
    const int i = g.i(), j = g.j(), k = h.i();
    Element r;
    if (k == 0) return r;
    if (j == k) r += Pi(i);
    if (i == k) r -= Pi(j);
    return r * I;
  }
  if (fg == Family::V && fh == Family::Pi) {
    const int i = g.i(), j = h.i();
    if (j == 0) return Pi(i) * I;
    Element r;
    if (i == j)
      for (int k = 1; k <= 3; ++k)
        r += Element::word({Word{pi_gen(k), pi_gen(k)}}).scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::kbar_inv)));
    r -= Element::word({Word{pi_gen(std::min(i, j)), pi_gen(std::max(i, j))}}).scaled(Scalar(GaussRat(1), ParamMono::of(Param::kbar_inv)));
    return r;
  }
  if ((fg == Family::V || fg == Family::Pi) && fh == Family::K) return -printed_algebra(h, g);
  if (fg == Family::Pi && fh == Family::V) return -printed_algebra(h, g);
  return {};
}

}  // namespace

CommutatorTable galilei_algebra_reference() {
  CommutatorTable t;
  const auto gens = galilei_generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Element v = printed_algebra(gens[a], gens[b]);
      if (!v.is_zero()) t[{gens[a], gens[b]}] = v;
    }
  return t;
}

}  // namespace twistkit
