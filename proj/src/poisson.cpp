#include "twistkit/poisson.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "twistkit/poincare.hpp"
#include "twistkit/render.hpp"

namespace twistkit {

namespace {

Gen lam_gen(int mu, int nu) { return Gen(Family::Lam, mu, nu); }
Gen a_gen(int mu) { return Gen(Family::a, mu); }

Element mul(const Element& a, const Element& b) { return group_ring()->multiply(a, b); }

}  // namespace

PresentationPtr group_ring() {
  static const PresentationPtr ring = [] {
    return std::make_shared<const Presentation>("group-functions", group_generators(),
                                                TruncationPolicy::unbounded());
  }();
  return ring;
}

std::vector<Gen> group_generators() {
  std::vector<Gen> g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) g.push_back(lam_gen(mu, nu));
  for (int mu = 0; mu < 4; ++mu) g.push_back(a_gen(mu));
  return g;
}

Element Lam(int mu, int nu) { return gen_element(lam_gen(mu, nu)); }
Element Lam_up(int mu, int nu) { return Lam(mu, nu) * GaussRat(eta(nu)); }
Element Lam_low(int mu, int nu) { return Lam(mu, nu) * GaussRat(eta(mu)); }
Element A(int mu) { return gen_element(a_gen(mu)); }
Element A_low(int mu) { return A(mu) * GaussRat(eta(mu)); }

// ---------------------------------------------------------------------------
// vector fields

namespace {

void add_component(VectorField& X, Gen v, const Element& coef) {
  X.components[v] += coef;
  if (X.components[v].is_zero()) X.components.erase(v);
}

std::string chir(Chirality c) { return c == Chirality::left ? "L" : "R"; }

}  // namespace

VectorField lorentz_field(int alpha, int beta, Chirality c) {
  VectorField X;
  X.label = "X" + chir(c) + "[" + std::to_string(alpha) + "," + std::to_string(beta) + "]";
  if (c == Chirality::left) {
    // Λ^{μα} ∂/∂Λ^μ_β − Λ^{μβ} ∂/∂Λ^μ_α
    for (int mu = 0; mu < 4; ++mu) {
      add_component(X, lam_gen(mu, beta), Lam_up(mu, alpha));
      add_component(X, lam_gen(mu, alpha), -Lam_up(mu, beta));
    }
    return X;
  }
  // Λ^β_ν ∂/∂Λ_{αν} − Λ^α_ν ∂/∂Λ_{βν} + a^β ∂/∂a_α − a^α ∂/∂a_β, the
  // generator of Λ -> exp(tM)Λ. Written with ∂/∂Λ^{αν} the boosts would not
  // agree with the left fields at the identity.
  for (int nu = 0; nu < 4; ++nu) {
    add_component(X, lam_gen(alpha, nu), Lam(beta, nu) * GaussRat(eta(alpha)));
    add_component(X, lam_gen(beta, nu), -Lam(alpha, nu) * GaussRat(eta(beta)));
  }
  add_component(X, a_gen(alpha), A(beta) * GaussRat(eta(alpha)));
  add_component(X, a_gen(beta), -A(alpha) * GaussRat(eta(beta)));
  return X;
}

VectorField translation_field(int alpha, Chirality c) {
  VectorField X;
  X.label = "X" + chir(c) + "[" + std::to_string(alpha) + "]";
  if (c == Chirality::left) {
    for (int mu = 0; mu < 4; ++mu) add_component(X, a_gen(mu), Lam_up(mu, alpha));
  } else {
    add_component(X, a_gen(alpha), Element::unit() * GaussRat(eta(alpha)));
  }
  return X;
}

VectorField basis_field(Gen g, Chirality c) {
  if (g.family() == Family::M) return lorentz_field(g.i(), g.j(), c);
  if (g.family() == Family::P) {
    VectorField X = translation_field(g.i(), c);
    for (auto& [v, e] : X.components) e = e * GaussRat(eta(g.i()));
    return X;
  }
  throw UnknownGenerator("no invariant vector field for " + g.name());
}

Element derivative(const Element& f, Gen v) {
  Element out;
  for (const auto& [k, c] : f.terms()) {
    const Word& w = k.legs[0];
    auto lo = std::lower_bound(w.begin(), w.end(), v);
    auto hi = std::upper_bound(w.begin(), w.end(), v);
    if (lo == hi) continue;
    Word rest(w.begin(), lo);
    rest.insert(rest.end(), lo + 1, w.end());
    out.add_term(Element::Key{{rest}, k.params}, c * GaussRat(static_cast<long>(hi - lo)));
  }
  return out;
}

Element apply_field(const VectorField& X, const Element& f) {
  Element out;
  for (const auto& [v, coef] : X.components) {
    const Element d = derivative(f, v);
    if (!d.is_zero()) out += mul(coef, d);
  }
  return out;
}

Element sklyanin_bracket(const Element& f, const Element& g, const WedgeBivector& r) {
  group_ring()->validate(f);
  group_ring()->validate(g);
  std::map<std::pair<Gen, int>, Element> fx, gx;
  auto field_of = [&](std::map<std::pair<Gen, int>, Element>& cache, const Element& h, Gen b,
                      Chirality c) -> const Element& {
    const auto key = std::make_pair(b, static_cast<int>(c));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, apply_field(basis_field(b, c), h)).first;
    return it->second;
  };
  Element out;
  for (const auto& [k, t] : r.tensor().terms()) {
    const Gen a = k.legs[0][0], b = k.legs[1][0];
    const Element right = mul(field_of(fx, f, a, Chirality::right), field_of(gx, g, b, Chirality::right));
    const Element left = mul(field_of(fx, f, a, Chirality::left), field_of(gx, g, b, Chirality::left));
    out += (right - left).scaled(Scalar(t, k.params));
  }
  return out;
}

// ---------------------------------------------------------------------------
// quantization

CommutatorTable quantize_bracket_table(const WedgeBivector& r) {
  const auto gens = group_generators();
  std::vector<std::pair<Gen, Gen>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) pairs.emplace_back(gens[i], gens[j]);

  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<Element>>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<Element> vals;
      for (std::size_t p = w; p < pairs.size(); p += workers)
        vals.push_back(sklyanin_bracket(gen_element(pairs[p].first), gen_element(pairs[p].second), r) *
                       GaussRat::i_unit());
      return vals;
    }));
  CommutatorTable t;
  for (unsigned w = 0; w < workers; ++w) {
    auto vals = jobs[w].get();
    std::size_t n = 0;
    for (std::size_t p = w; p < pairs.size(); p += workers, ++n)
      if (!vals[n].is_zero()) t[pairs[p]] = vals[n];
  }
  return t;
}

Element table_value(const CommutatorTable& t, Gen g, Gen h) {
  if (g == h) return {};
  if (g < h) {
    auto it = t.find({g, h});
    return it == t.end() ? Element{} : it->second;
  }
  auto it = t.find({h, g});
  return it == t.end() ? Element{} : -it->second;
}

Element commutator_with(const CommutatorTable& t, Gen g, const Element& f) {
  Element out;
  for (Gen v : group_generators()) {
    const Element d = derivative(f, v);
    if (d.is_zero()) continue;
    const Element c = table_value(t, g, v);
    if (!c.is_zero()) out += mul(d, c);
  }
  return out;
}

std::vector<std::string> table_jacobi_failures(const CommutatorTable& t) {
  const auto gens = group_generators();
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const Gen x = gens[i], y = gens[j], z = gens[k];
        const Element jac = commutator_with(t, x, table_value(t, y, z)) +
                            commutator_with(t, y, table_value(t, z, x)) +
                            commutator_with(t, z, table_value(t, x, y));
        if (!reduce_orthogonality(jac).is_zero())
          bad.push_back(x.name() + "," + y.name() + "," + z.name());
      }
  return bad;
}

// ---------------------------------------------------------------------------
// orthogonality reduction

namespace {

// Graded lex, largest first.
struct MonoDesc {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};
using Row = std::map<Word, Rational, MonoDesc>;

Word merge_words(const Word& a, const Word& b) {
  Word out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Row> orthogonality_relations() {
  std::vector<Row> rel;
  for (int al = 0; al < 4; ++al)
    for (int be = al; be < 4; ++be) {
      Row a, b;
      for (int mu = 0; mu < 4; ++mu) {
        // Λ^μ_α η_μμ Λ^μ_β and Λ^α_μ η^μμ Λ^β_μ
        a[merge_words({lam_gen(mu, al)}, {lam_gen(mu, be)})] += eta(mu);
        b[merge_words({lam_gen(al, mu)}, {lam_gen(be, mu)})] += eta(mu);
      }
      if (al == be) {
        a[Word{}] -= eta(al);
        b[Word{}] -= eta(al);
      }
      rel.push_back(a);
      rel.push_back(b);
    }
  return rel;
}

std::vector<Word> monomials_up_to(int degree) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const Gen g = lam_gen(mu, nu);
          if (!w.empty() && g < w.back()) continue;
          Word n = w;
          n.push_back(g);
          next.push_back(n);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Echelon form of span{m · rel : deg m ≤ degree − 2}, keyed by pivot.
class OrthogonalityBasis {
 public:
  explicit OrthogonalityBasis(int degree) {
    const auto rels = orthogonality_relations();
    for (const auto& m : monomials_up_to(degree - 2))
      for (const auto& r : rels) {
        Row row;
        for (const auto& [w, c] : r) row[merge_words(m, w)] += c;
        insert(std::move(row));
      }
  }

  // Remainder of a Λ-polynomial with Gaussian coefficients.
  std::map<Word, GaussRat, MonoDesc> reduce(std::map<Word, GaussRat, MonoDesc> f) const {
    std::map<Word, GaussRat, MonoDesc> rem;
    while (!f.empty()) {
      auto it = f.begin();
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        rem.insert(*it);
        f.erase(it);
        continue;
      }
      const GaussRat c = it->second;
      for (const auto& [w, v] : p->second) {
        auto [jt, ins] = f.try_emplace(w, GaussRat());
        jt->second += GaussRat(-v) * c;
        if (jt->second.is_zero()) f.erase(jt);
      }
    }
    return rem;
  }

 private:
  void insert(Row row) {
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Rational c = it->second;
      const Word lead = it->first;
      for (const auto& [w, v] : p->second) {
        Rational& slot = row[w];
        slot -= c * v;
      }
      // drop zeros (including the eliminated lead) and restart after it
      for (auto jt = row.begin(); jt != row.end();)
        jt = sgn(jt->second) == 0 ? row.erase(jt) : std::next(jt);
      it = row.upper_bound(lead);
    }
    if (row.empty()) return;
    const Rational lc = row.begin()->second;
    for (auto& [w, v] : row) v /= lc;
    pivots_.emplace(row.begin()->first, std::move(row));
  }

  std::map<Word, Row, MonoDesc> pivots_;
};

const OrthogonalityBasis& basis_for(int degree) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<OrthogonalityBasis>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<OrthogonalityBasis>(degree);
  return *slot;
}

}  // namespace

Element reduce_orthogonality(const Element& f) {
  // Group by the non-Λ part of each word and the parameter monomial.
  std::map<std::pair<Word, ParamMono>, std::map<Word, GaussRat, MonoDesc>> groups;
  int degree = 2;
  for (const auto& [k, c] : f.terms()) {
    const Word& w = k.legs[0];
    auto split = std::find_if(w.begin(), w.end(), [](Gen g) { return g.family() != Family::Lam; });
    Word lam(w.begin(), split), rest(split, w.end());
    degree = std::max<int>(degree, static_cast<int>(lam.size()));
    groups[{rest, k.params}][lam] += c;
  }
  const auto& basis = basis_for(degree);
  Element out;
  for (auto& [key, poly] : groups) {
    for (const auto& [lam, c] : basis.reduce(std::move(poly)))
      out.add_term(Element::Key{{merge_words(lam, key.first)}, key.second}, c);
  }
  return out;
}

bool equal_mod_orthogonality(const Element& a, const Element& b) {
  return reduce_orthogonality(a - b).is_zero();
}

// ---------------------------------------------------------------------------
// rational group points

GroupPoint cayley_point(const std::array<Rational, 6>& s, const std::array<Rational, 4>& a) {
  Rational S[4][4];
  int n = 0;
  for (int i = 0; i < 4; ++i) S[i][i] = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      S[i][j] = s[n++];
      S[j][i] = -S[i][j];
    }
  // Solve (1 − W) Λ = (1 + W), W = ηS, by Gauss–Jordan on [1−W | 1+W].
  Rational m[4][8];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rational w = S[i][j] * eta(i);
      m[i][j] = (i == j ? 1 : 0) - w;
      m[i][j + 4] = (i == j ? 1 : 0) + w;
    }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    if (piv == 4) throw Error("Cayley transform is singular for this generator");
    if (piv != col)
      for (int j = 0; j < 8; ++j) std::swap(m[piv][j], m[col][j]);
    const Rational p = m[col][col];
    for (int j = 0; j < 8; ++j) m[col][j] /= p;
    for (int i = 0; i < 4; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (int j = 0; j < 8; ++j) m[i][j] -= f * m[col][j];
    }
  }
  GroupPoint pt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pt.lam[i][j] = m[i][j + 4];
  pt.a = a;
  return pt;
}

Element evaluate(const Element& f, const GroupPoint& p) {
  Element out;
  for (const auto& [k, c] : f.terms()) {
    Rational v = 1;
    for (Gen g : k.legs[0]) {
      if (g.family() == Family::Lam)
        v *= p.lam[g.i()][g.j()];
      else if (g.family() == Family::a)
        v *= p.a[g.i()];
      else
        throw UnknownGenerator("cannot evaluate " + g.name() + " at a group point");
    }
    out.add_term(Element::Key{{Word{}}, k.params}, c * GaussRat(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// reference tables

namespace {

Element num(long v) { return Element::unit() * GaussRat(v); }
Element param(Param p, const GaussRat& v = GaussRat(1)) { return Element::scalar(Scalar(v, ParamMono::of(p))); }

Element kappa_lambda_a(int al, int be, int rho) {
  // −(i/κ)((Λ^α_0 − δ^α_0)Λ^ρ_β + η^{αρ}(Λ_{0β} − η_{0β}))
  Element inner = mul(Lam(al, 0) - num(delta(al, 0)), Lam(rho, be));
  if (al == rho) inner += (Lam_low(0, be) - num(be == 0 ? eta(0) : 0)) * GaussRat(eta(al));
  return mul(param(Param::kinv, GaussRat(0, -1)), inner);
}

Element kappa_a_a(int rho, int sg) {
  // −(i/κ)(δ^σ_0 a^ρ − δ^ρ_0 a^σ)
  return mul(param(Param::kinv, GaussRat(0, -1)), A(rho) * GaussRat(delta(sg, 0)) - A(sg) * GaussRat(delta(rho, 0)));
}

void put(CommutatorTable& t, Gen g, Gen h, const Element& v) {
  if (v.is_zero()) return;
  if (g < h)
    t[{g, h}] = v;
  else
    t[{h, g}] = -v;
}

}  // namespace

CommutatorTable kappa_group_reference() {
  CommutatorTable t;
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be)
      for (int rho = 0; rho < 4; ++rho) put(t, lam_gen(al, be), a_gen(rho), kappa_lambda_a(al, be, rho));
  for (int rho = 0; rho < 4; ++rho)
    for (int sg = rho + 1; sg < 4; ++sg) put(t, a_gen(rho), a_gen(sg), kappa_a_a(rho, sg));
  return t;
}

CommutatorTable extended_group_reference() {
  CommutatorTable t;
  const auto ieta = [](int mu, int b) { return GaussRat(mu == b ? eta(mu) : 0); };
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be)
      for (int rho = 0; rho < 4; ++rho) {
        // + (1/κ̂)(Λ^ρ_0(η_{2β}Λ^α_1 − η_{1β}Λ^α_2) + δ^ρ_0(δ^α_2 Λ_{1β} − δ^α_1 Λ_{2β}))
        Element hat = mul(Lam(rho, 0), Lam(al, 1) * ieta(2, be) - Lam(al, 2) * ieta(1, be));
        if (rho == 0) hat += Lam_low(1, be) * GaussRat(delta(al, 2)) - Lam_low(2, be) * GaussRat(delta(al, 1));
        put(t, lam_gen(al, be), a_gen(rho), kappa_lambda_a(al, be, rho) + mul(param(Param::khinv), hat));
      }
  for (int rho = 0; rho < 4; ++rho)
    for (int sg = rho + 1; sg < 4; ++sg) {
      Element v = kappa_a_a(rho, sg);
      const GaussRat i(0, 1);
      Element hat = (A(1) * GaussRat(delta(rho, 2)) - A(2) * GaussRat(delta(rho, 1))) * GaussRat(delta(sg, 0)) +
                    (A(2) * GaussRat(delta(sg, 1)) - A(1) * GaussRat(delta(sg, 2))) * GaussRat(delta(rho, 0));
      v += mul(param(Param::khinv, i), hat);
      Element xi = num(delta(rho, 3) * delta(sg, 0) - delta(rho, 0) * delta(sg, 3)) +
                   mul(Lam(rho, 0), Lam(sg, 3)) - mul(Lam(rho, 3), Lam(sg, 0));
      v += mul(param(Param::xi, GaussRat(0, ratio(1, 2))), xi);
      put(t, a_gen(rho), a_gen(sg), v);
    }
  return t;
}

// ---------------------------------------------------------------------------
// group Hopf tables

GroupHopfTable group_hopf(bool standard) {
  GroupHopfTable h;
  auto inv = [](int mu, int nu) { return Lam(nu, mu) * GaussRat(eta(mu) * eta(nu)); };  // (Λ⁻¹)^μ_ν
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Tensor2 d;
      for (int al = 0; al < 4; ++al) d += tensor(Lam(mu, al), Lam(al, nu));
      h.coproduct[lam_gen(mu, nu)] = d;
      h.antipode[lam_gen(mu, nu)] = standard ? inv(mu, nu) : Lam(mu, nu);
      h.counit[lam_gen(mu, nu)] = GaussRat(delta(mu, nu));
    }
    Tensor2 d = tensor(A(mu), Element::unit());
    Element s;
    for (int nu = 0; nu < 4; ++nu) {
      d += tensor(Lam(mu, nu), A(nu));
      s -= standard ? mul(inv(mu, nu), A(nu)) : mul(Lam(mu, nu), A(mu));
    }
    h.coproduct[a_gen(mu)] = d;
    h.antipode[a_gen(mu)] = s;
    h.counit[a_gen(mu)] = GaussRat(0);
  }
  return h;
}

std::map<Gen, Element> group_antipode_residuals(const GroupHopfTable& h) {
  std::map<Gen, Element> out;
  for (const auto& [g, d] : h.coproduct) {
    Element sum = Element::unit() * -h.counit.at(g);
    for (const auto& [k, c] : d.terms()) {
      Element s = Element::scalar(Scalar(c, k.params));
      for (Gen x : k.legs[0]) s = mul(s, h.antipode.at(x));
      Element rest = Element::word({k.legs[1]});
      sum += mul(s, rest);
    }
    out[g] = reduce_orthogonality(sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// report

namespace {

// Part of a table whose coefficients carry exactly the parameter p.
CommutatorTable part(const CommutatorTable& t, Param p) {
  CommutatorTable out;
  for (const auto& [k, v] : t) {
    Element f = v.filtered([p](const ParamMono& m) { return m == ParamMono::of(p); });
    if (!f.is_zero()) out[k] = f;
  }
  return out;
}

CommutatorTable block(const CommutatorTable& t, Family f1, Family f2) {
  CommutatorTable out;
  for (const auto& [k, v] : t)
    if (k.first.family() == f1 && k.second.family() == f2) out[k] = v;
  return out;
}

CommutatorTable scaled(const CommutatorTable& t, const GaussRat& s) {
  CommutatorTable out;
  for (const auto& [k, v] : t) out[k] = v * s;
  return out;
}

// Pairs (of either table) whose values differ modulo orthogonality.
std::vector<std::pair<Gen, Gen>> mismatches(const CommutatorTable& a, const CommutatorTable& b,
                                           bool exact = false) {
  std::set<std::pair<Gen, Gen>> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  std::vector<std::pair<Gen, Gen>> bad;
  for (const auto& k : keys) {
    const Element x = a.count(k) ? a.at(k) : Element{};
    const Element y = b.count(k) ? b.at(k) : Element{};
    if (exact ? x != y : !equal_mod_orthogonality(x, y)) bad.push_back(k);
  }
  return bad;
}

std::string show_pairs(const std::vector<std::pair<Gen, Gen>>& v, const CommutatorTable& computed,
                       const CommutatorTable& expected, std::size_t limit = 3) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    const auto& k = v[i];
    if (i) os << "; ";
    os << "[" << k.first.name() << "," << k.second.name() << "]: computed "
       << render_text(reduce_orthogonality(table_value(computed, k.first, k.second))) << ", expected "
       << render_text(reduce_orthogonality(table_value(expected, k.first, k.second)));
  }
  if (v.size() > limit) os << "; ... (" << v.size() << " entries)";
  return os.str();
}

ReportEntry compare(const std::string& id, const std::string& title, const CommutatorTable& computed,
                    const CommutatorTable& expected, bool exact = false) {
  ReportEntry e;
  e.id = id;
  e.title = title;
  e.orders = exact ? "exact" : "exact, modulo orthogonality";
  const auto bad = mismatches(computed, expected, exact);
  e.status = bad.empty() ? Status::pass : Status::fail;
  if (!bad.empty()) e.residual = show_pairs(bad, computed, expected);
  return e;
}

}  // namespace

Report check_poisson_quantization() {
  const auto t0 = std::chrono::steady_clock::now();
  const WedgeBivector r = r_kappa() + r_kappa_hat() + r_xi();
  const CommutatorTable q = quantize_bracket_table(r);
  const CommutatorTable ref = extended_group_reference();
  Report rep;

  rep.push_back(compare("poisson.L-L", "[L,L] = 0", block(q, Family::Lam, Family::Lam), {}, true));

  const std::pair<Param, std::string> parts[] = {
      {Param::kinv, "kappa"}, {Param::khinv, "hat"}, {Param::xi, "xi"}};
  for (const auto& [p, label] : parts) {
    for (const auto& [f2, blk] : {std::pair{Family::Lam, std::string("L-a")}, std::pair{Family::a, std::string("a-a")}}) {
      const auto c = block(part(q, p), f2, Family::a);
      const auto x = block(part(ref, p), f2, Family::a);
      auto e = compare("poisson." + blk + "." + label, "quantized [" + blk + "] " + label + " terms", c, x);
      if (e.status == Status::fail) {
        // Diagnose the usual normalisation and phase slips.
        std::vector<std::string> hits;
        for (const auto& [s, name] : {std::pair{GaussRat(ratio(-1, 2)), std::string("-1/2")},
                                      std::pair{GaussRat(0, 1), std::string("I")},
                                      std::pair{GaussRat(0, ratio(-1, 2)), std::string("-I/2")}}) {
          const auto rest = mismatches(c, scaled(x, s));
          if (rest.size() < mismatches(c, x).size())
            hits.push_back("computed = " + name + " x printed " +
                           (rest.empty() ? std::string("on every entry")
                                         : "on all but " + std::to_string(rest.size()) + " entries"));
        }
        for (std::size_t i = 0; i < hits.size(); ++i) e.note += (i ? "; " : "") + hits[i];
      }
      rep.push_back(e);
    }
  }

  // κ̂ -> ∞ and ξ -> 0 inside the full table.
  CommutatorTable qk;
  for (const auto& [k, v] : q) {
    Element d = v.with_param_zero(Param::khinv).with_param_zero(Param::xi);
    if (!d.is_zero()) qk[k] = d;
  }
  rep.push_back(compare("poisson.degeneration.kappa", "khinv = 0, xi = 0 gives the kappa group table", qk,
                        kappa_group_reference()));

  {
    // Antipode stored as printed; the standard dual-group form is reported next to it.
    auto failing = [](const GroupHopfTable& h) {
      std::size_t n = 0;
      for (const auto& [g, res] : group_antipode_residuals(h)) n += res.is_zero() ? 0 : 1;
      return n;
    };
    const std::size_t printed = failing(group_hopf(false)), standard = failing(group_hopf(true));
    ReportEntry e;
    e.id = "poisson.group.antipode";
    e.title = "m(S x 1)Delta = eps on the group coordinates";
    e.orders = "exact, modulo orthogonality";
    e.expected = "S(L) = L^-1, S(a) = -L^-1 a";
    e.computed = "S(L[mu,nu]) = L[mu,nu], S(a[mu]) = -sum_nu L[mu,nu]*a[mu]";
    if (printed == 0) {
      e.status = Status::pass;
    } else if (standard == 0) {
      e.status = Status::flagged;
      e.note = "printed antipode fails on " + std::to_string(printed) + " coordinates; the standard form passes";
    } else {
      e.status = Status::fail;
      e.residual = "standard antipode fails on " + std::to_string(standard) + " coordinates";
    }
    rep.push_back(e);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& x : rep) x.seconds = secs / static_cast<double>(rep.size());
  return rep;
}

}  // namespace twistkit
