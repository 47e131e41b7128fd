#include "twistkit/star.hpp"

#include <algorithm>

#include "twistkit/render.hpp"
#include "twistkit/series.hpp"

namespace twistkit {

PresentationPtr coordinate_ring() {
  static const PresentationPtr ring = [] {
    std::vector<Gen> g;
    for (int mu = 0; mu < 4; ++mu) g.emplace_back(Family::x, mu);
    return std::make_shared<const Presentation>("coordinates", g, TruncationPolicy::unbounded());
  }();
  return ring;
}

Element X(int mu) { return gen_element(Gen(Family::x, mu)); }

std::string star_kind_name(StarKind k) {
  switch (k) {
    case StarKind::kappa: return "kappa";
    case StarKind::xi: return "xi";
    case StarKind::hat: return "hat";
    case StarKind::kappa_xi: return "kappa-xi";
    case StarKind::kappa_hat: return "kappa-hat";
  }
  return "?";
}

StarKind star_kind_from_name(const std::string& name) {
  for (auto k : {StarKind::kappa, StarKind::xi, StarKind::hat, StarKind::kappa_xi, StarKind::kappa_hat})
    if (star_kind_name(k) == name) return k;
  throw Error("unknown star operator '" + name + "' (kappa, xi, hat, kappa-xi, kappa-hat)");
}

namespace {

Gen x(int mu) { return Gen(Family::x, mu); }

Word sorted(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

// c^μ_{ρτ}: c^i_{0i} = −c^i_{i0} = −1/(2κ); returned as a rational multiple of kinv.
Rational c_coeff(int mu, int rho, int tau) {
  if (mu == 0) return 0;
  if (rho == 0 && tau == mu) return ratio(-1, 2);
  if (rho == mu && tau == 0) return ratio(1, 2);
  return 0;
}

StarFactor kappa_factor(int gamma_order, GammaSecond second) {
  StarFactor f{"O_kappa", {}};
  const ParamMono k1 = ParamMono::of(Param::kinv), k2 = ParamMono::of(Param::kinv, 2);
  for (int mu = 0; mu < 4; ++mu)
    for (int rho = 0; rho < 4; ++rho)
      for (int tau = 0; tau < 4; ++tau) {
        const Rational c = c_coeff(mu, rho, tau);
        if (sgn(c) == 0) continue;
        // i x_μ c^μ_{ρτ} ∂^ρ ⊗ ∂^τ
        f.exponent.push_back({GaussRat(0, c), k1, {x(mu)}, {Word{x(rho)}, Word{x(tau)}}, {}});
        if (gamma_order < 2) continue;
        for (int la = 0; la < 4; ++la)
          for (int nu = 0; nu < 4; ++nu) {
            const Rational c2 = c_coeff(rho, la, nu);
            if (sgn(c2) == 0) continue;
            GaussRat v(0, c * c2 / 12);
            if (second == GammaSecond::associative) v *= GaussRat(0, -4);
            // (1/12) c^μ_{ρτ} c^ρ_{λν} (∂^τ∂^λ ⊗ ∂^ν + ∂^ν ⊗ ∂^τ∂^λ)
            f.exponent.push_back({v, k2, {x(mu)}, {sorted({x(tau), x(la)}), Word{x(nu)}}, {}});
            f.exponent.push_back({v, k2, {x(mu)}, {Word{x(nu)}, sorted({x(tau), x(la)})}, {}});
          }
      }
  return f;
}

StarFactor xi_factor(int bound) {
  // −iκ(ξ/2) ∂³ ⊗ (e^{−∂⁰/κ} − 1) = −i(ξ/2) Σ_{n≥1} (−1)^n kinv^{n−1} ∂³ ⊗ (∂⁰)^n / n!
  StarFactor f{"O_xi", {}};
  for (int n = 1; n <= bound; ++n) {
    Rational c = ratio(n % 2 ? 1 : -1, 2) / factorial(n);  // −(−1)^n / 2
    ParamMono pm = ParamMono::of(Param::xi) * ParamMono::of(Param::kinv, n - 1);
    f.exponent.push_back({GaussRat(0, c), pm, {}, {Word{x(3)}, Word(static_cast<std::size_t>(n), x(0))}, {}});
  }
  return f;
}

StarFactor hat_factor() {
  // −(i/2κ̂)(L ⊗ ∂⁰ − ∂⁰ ⊗ L), L = x1 ∂² − x2 ∂¹
  StarFactor f{"O_hat", {}};
  const ParamMono kh = ParamMono::of(Param::khinv);
  const GaussRat h(0, ratio(-1, 2));
  f.exponent.push_back({h, kh, {}, {Word{x(2)}, Word{x(0)}}, {Word{x(1)}, Word{}}});
  f.exponent.push_back({-h, kh, {}, {Word{x(1)}, Word{x(0)}}, {Word{x(2)}, Word{}}});
  f.exponent.push_back({-h, kh, {}, {Word{x(0)}, Word{x(2)}}, {Word{}, Word{x(1)}}});
  f.exponent.push_back({h, kh, {}, {Word{x(0)}, Word{x(1)}}, {Word{}, Word{x(2)}}});
  return f;
}

// ∂/∂x_μ of a sorted commutative word: multiplicity times the word with one x_μ removed.
bool differentiate(Word& w, Gen v, Rational& factor) {
  auto lo = std::lower_bound(w.begin(), w.end(), v);
  auto hi = std::upper_bound(w.begin(), w.end(), v);
  const long n = hi - lo;
  if (n == 0) return false;
  factor *= n;
  w.erase(lo);
  return true;
}

Word merge(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Tensor3 apply_exponent(const StarFactor& f, const Tensor3& state) {
  Tensor3 out;
  for (const auto& [k, v] : state.terms())
    for (const auto& t : f.exponent) {
      Rational factor = 1;
      auto legs = k.legs;
      bool alive = true;
      for (int leg = 0; leg < 2 && alive; ++leg)
        for (Gen d : t.deriv[leg])
          if (!differentiate(legs[leg + 1], d, factor)) {
            alive = false;
            break;
          }
      if (!alive) continue;
      for (int leg = 0; leg < 2; ++leg) legs[leg + 1] = merge(legs[leg + 1], t.mult[leg]);
      legs[0] = merge(legs[0], t.ext);
      out.add_term(Tensor3::Key{legs, k.params * t.params}, v * t.coef * GaussRat(factor));
    }
  return out;
}

Tensor3 apply_factor(const StarFactor& f, const Tensor3& state) {
  Tensor3 sum = state, term = state;
  for (int n = 1;; ++n) {
    term = apply_exponent(f, term) * GaussRat(ratio(1, n));
    if (term.is_zero()) return sum;
    sum += term;
  }
}

int degree_in(const Element& e, Gen g) {
  int m = 0;
  for (const auto& [k, v] : e.terms())
    m = std::max<int>(m, static_cast<int>(std::count(k.legs[0].begin(), k.legs[0].end(), g)));
  return m;
}

}  // namespace

StarOperator build_star_operator(StarKind kind, const StarOptions& options) {
  if (options.gamma_order < 1 || options.gamma_order > 2)
    throw Error("gamma order " + std::to_string(options.gamma_order) + " not supported (use 1 or 2)");
  if (options.derivative_bound < 1) throw Error("derivative bound must be positive");
  StarOperator op;
  op.kind = kind;
  op.options = options;
  const bool with_kappa = kind == StarKind::kappa || kind == StarKind::kappa_xi || kind == StarKind::kappa_hat;
  if (with_kappa) op.factors.push_back(kappa_factor(options.gamma_order, options.second));
  if (kind == StarKind::xi || kind == StarKind::kappa_xi) op.factors.push_back(xi_factor(options.derivative_bound));
  if (kind == StarKind::hat || kind == StarKind::kappa_hat) op.factors.push_back(hat_factor());
  if (options.composition == Composition::twist_first && op.factors.size() == 2)
    std::swap(op.factors[0], op.factors[1]);
  return op;
}

Element star_multiply(const Element& f, const Element& g, const StarOperator& op) {
  const auto ring = coordinate_ring();
  ring->validate(f);
  ring->validate(g);
  if (degree_in(f, x(0)) > op.options.derivative_bound || degree_in(g, x(0)) > op.options.derivative_bound)
    throw Error("polynomial degree in x[0] exceeds the operator's derivative bound " +
                std::to_string(op.options.derivative_bound));
  Tensor3 state = twistkit::tensor(Element::unit(), twistkit::tensor(f, g));
  for (const auto& factor : op.factors) state = apply_factor(factor, state);
  Element out;
  for (const auto& [k, v] : state.terms())
    out.add_term(Element::Key{{merge(merge(k.legs[0], k.legs[1]), k.legs[2])}, k.params}, v);
  return out;
}

Element star_commutator(const Element& f, const Element& g, const StarOperator& op) {
  return star_multiply(f, g, op) - star_multiply(g, f, op);
}

std::string describe(const StarOperator& op) {
  std::string s;
  for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it) {
    if (!s.empty()) s += " o ";
    s += it->label + " = exp(";
    bool first = true;
    for (const auto& t : it->exponent) {
      std::string term = render_text(Element::scalar(Scalar(t.coef, t.params)));
      if (!t.ext.empty()) term += "*" + word_name(t.ext);
      for (int leg = 0; leg < 2; ++leg) {
        std::string l;
        for (Gen d : t.deriv[leg]) l += (l.empty() ? "" : "*") + std::string("d[") + std::to_string(d.i()) + "]";
        if (!t.mult[leg].empty()) l = word_name(t.mult[leg]) + (l.empty() ? "" : "*" + l);
        term += (leg ? " ox " : " ") + (l.empty() ? std::string("1") : l);
      }
      s += (first ? "" : " + ") + term;
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "identity" : s;
}

}  // namespace twistkit
