#include "twistkit/rmatrix.hpp"

#include <chrono>

#include "twistkit/poincare.hpp"
#include "twistkit/render.hpp"

namespace twistkit {

LieAlgebra::LieAlgebra(PresentationPtr hermitian)
    : hermitian_(std::move(hermitian)), basis_(hermitian_->generators()) {
  const GaussRat minus_i = GaussRat(0, -1);
  for (const auto& [key, v] : hermitian_->table()) {
    for (const auto& [k, c] : v.terms())
      if (k.legs[0].size() != 1 || !k.params.is_one())
        throw Error("presentation " + hermitian_->name() + " is not a Lie algebra table");
    const Element real = v * minus_i;
    f_[key] = real;
    f_[{key.second, key.first}] = -real;
  }
}

LieAlgebra LieAlgebra::classical_poincare() {
  return LieAlgebra(classical_poincare_algebra(TruncationPolicy::unbounded()));
}

const Element& LieAlgebra::f(Gen a, Gen b) const {
  auto it = f_.find({a, b});
  return it == f_.end() ? zero_ : it->second;
}

std::vector<std::string> LieAlgebra::jacobi_failures() const {
  std::vector<std::string> bad;
  auto bracket = [&](const Element& x, Gen b) {
    Element out;
    for (const auto& [k, v] : x.terms()) out += f(k.legs[0][0], b).scaled(Scalar(v, k.params));
    return out;
  };
  for (Gen a : basis_)
    for (Gen b : basis_)
      for (Gen c : basis_) {
        // [[a,b],c] + [[b,c],a] + [[c,a],b]
        const Element j = bracket(f(a, b), c) + bracket(f(b, c), a) + bracket(f(c, a), b);
        if (!j.is_zero()) bad.push_back(a.name() + "," + b.name() + "," + c.name());
      }
  return bad;
}

namespace {

bool single_letter_legs(const auto& t) {
  for (const auto& [k, v] : t.terms())
    for (const auto& w : k.legs)
      if (w.size() != 1) return false;
  return true;
}

}  // namespace

WedgeBivector::WedgeBivector(Tensor2 t) : t_(std::move(t)) {
  if (!single_letter_legs(t_)) throw Error("bivector legs must be single generators");
  if (!(flip(t_) == -t_)) throw Error("bivector is not antisymmetric");
}

WedgeBivector WedgeBivector::wedge(const Element& a, const Element& b) {
  return WedgeBivector(twistkit::wedge(a, b));
}

std::map<std::tuple<Gen, Gen, ParamMono>, GaussRat> WedgeBivector::components() const {
  std::map<std::tuple<Gen, Gen, ParamMono>, GaussRat> out;
  for (const auto& [k, v] : t_.terms())
    if (k.legs[0][0] < k.legs[1][0]) out[{k.legs[0][0], k.legs[1][0], k.params}] = v;
  return out;
}

namespace {

// Permutes legs of every term: result leg i = input leg perm[i].
Tensor3 permuted(const Tensor3& t, const std::array<int, 3>& perm) {
  Tensor3 r;
  for (const auto& [k, v] : t.terms())
    r.add_term(Tensor3::Key{{k.legs[perm[0]], k.legs[perm[1]], k.legs[perm[2]]}, k.params}, v);
  return r;
}

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
constexpr std::array<int, 6> kSigns = {1, 1, 1, -1, -1, -1};

}  // namespace

WedgeTrivector::WedgeTrivector(Tensor3 t) : t_(std::move(t)) {
  if (!single_letter_legs(t_)) throw Error("trivector legs must be single generators");
  for (std::size_t p = 1; p < 6; ++p)
    if (!(permuted(t_, kPerms[p]) == t_ * GaussRat(kSigns[p])))
      throw Error("trivector is not totally antisymmetric");
}

WedgeTrivector WedgeTrivector::wedge(const Element& a, const Element& b, const Element& c) {
  const Tensor3 abc = twistkit::tensor(twistkit::tensor(a, b), c);
  Tensor3 sum;
  for (std::size_t p = 0; p < 6; ++p) sum += permuted(abc, kPerms[p]) * GaussRat(kSigns[p]);
  return WedgeTrivector(sum);
}

std::map<std::tuple<Gen, Gen, Gen, ParamMono>, GaussRat> WedgeTrivector::components() const {
  std::map<std::tuple<Gen, Gen, Gen, ParamMono>, GaussRat> out;
  for (const auto& [k, v] : t_.terms()) {
    const Gen a = k.legs[0][0], b = k.legs[1][0], c = k.legs[2][0];
    if (a < b && b < c) out[{a, b, c, k.params}] = v;
  }
  return out;
}

std::string WedgeTrivector::render() const {
  if (t_.is_zero()) return "0";
  std::string s;
  for (const auto& [key, v] : components()) {
    const auto& [a, b, c, pm] = key;
    Element coeff = Element::scalar(Scalar(v, pm));
    std::string cs = render_text(coeff);
    std::string term = (cs == "1" ? "" : cs == "-1" ? "-" : cs + "*") + a.name() + "^" + b.name() +
                       "^" + c.name();
    if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s;
}

namespace {

Tensor3 place(const WedgeBivector& r, int first, int second) {
  Tensor3 out;
  for (const auto& [k, v] : r.tensor().terms()) {
    Tensor3::Legs legs;
    legs[first] = k.legs[0];
    legs[second] = k.legs[1];
    out.add_term(Tensor3::Key{legs, k.params}, v);
  }
  return out;
}

Tensor3 one_sided_leg(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g) {
  const auto& u = g.enveloping();
  const Tensor3 a12 = place(r1, 0, 1), a13 = place(r1, 0, 2);
  const Tensor3 b13 = place(r2, 0, 2), b23 = place(r2, 1, 2);
  Tensor3 s = u.commutator(a12, b13 + b23) + u.commutator(a13, b23);
  return s * GaussRat(0, -1);  // Hermitian constants carry i
}

// Replaces leg `leg` of every term (single generator) by the element x_leg.
void add_with_leg(Tensor3& out, const Tensor3::Legs& legs, const ParamMono& pm, const GaussRat& v,
                  int leg, const Element& x) {
  for (const auto& [k, c] : x.terms()) {
    auto l = legs;
    l[leg] = k.legs[0];
    out.add_term(Tensor3::Key{l, pm * k.params}, v * c);
  }
}

Tensor3 one_sided_component(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g) {
  Tensor3 out;
  for (const auto& [k1, v1] : r1.tensor().terms())
    for (const auto& [k2, v2] : r2.tensor().terms()) {
      const Gen a = k1.legs[0][0], b = k1.legs[1][0], c = k2.legs[0][0], d = k2.legs[1][0];
      const ParamMono pm = k1.params * k2.params;
      const GaussRat v = v1 * v2;
      // [T_a,T_c] ⊗ T_b ⊗ T_d
      add_with_leg(out, {Word{}, Word{b}, Word{d}}, pm, v, 0, g.f(a, c));
      // T_a ⊗ [T_b,T_c] ⊗ T_d
      add_with_leg(out, {Word{a}, Word{}, Word{d}}, pm, v, 1, g.f(b, c));
      // T_a ⊗ T_c ⊗ [T_b,T_d]
      add_with_leg(out, {Word{a}, Word{c}, Word{}}, pm, v, 2, g.f(b, d));
    }
  return out;
}

}  // namespace

Tensor3 schouten_leg_form(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g) {
  return one_sided_leg(r1, r2, g);
}

Tensor3 schouten_component_form(const WedgeBivector& r1, const WedgeBivector& r2,
                                const LieAlgebra& g) {
  return one_sided_component(r1, r2, g);
}

WedgeTrivector schouten(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g) {
  const Tensor3 leg = one_sided_leg(r1, r2, g) + one_sided_leg(r2, r1, g);
  const Tensor3 comp = one_sided_component(r1, r2, g) + one_sided_component(r2, r1, g);
  if (!(leg == comp)) throw Error("Schouten bracket routes disagree");
  return WedgeTrivector(leg * GaussRat(ratio(1, 2)));
}

ReportEntry check_cybe(const std::string& id, const WedgeBivector& r, const LieAlgebra& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const WedgeTrivector s = schouten(r, r, g);
  ReportEntry e;
  e.id = id;
  e.title = "classical Yang-Baxter equation [[r,r]] = 0";
  e.orders = "exact";
  e.status = s.is_zero() ? Status::pass : Status::fail;
  if (!s.is_zero()) e.residual = s.render();
  e.computed = s.render();
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

ReportEntry check_mybe(const std::string& id, const WedgeBivector& r, const WedgeTrivector& rhs,
                       const LieAlgebra& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const WedgeTrivector s = schouten(r, r, g);
  const WedgeTrivector res = s - rhs;
  ReportEntry e;
  e.id = id;
  e.title = "modified Yang-Baxter equation [[r,r]] = rhs";
  e.orders = "exact";
  e.status = res.is_zero() ? Status::pass : Status::fail;
  if (!res.is_zero()) e.residual = res.render();
  e.computed = s.render();
  e.expected = rhs.render();
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

namespace {

// M_{μν} with lowered indices as an element of the upper-index basis.
Element m_lower(int mu, int nu) { return M(mu, nu) * GaussRat(eta(mu) * eta(nu)); }
// P^μ = η^{μμ} P_μ.
Element p_upper(int mu) { return P(mu) * GaussRat(eta(mu)); }

}  // namespace

WedgeBivector r_kappa() {
  const ParamMono kinv = ParamMono::of(Param::kinv);
  // r^{μν;α} = (1/2κ)(δ^μ_0 η^{να} − δ^ν_0 η^{μα})
  Tensor2 comp;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int al = 0; al < 4; ++al) {
        const int c = delta(mu, 0) * (nu == al ? eta(nu) : 0) - delta(nu, 0) * (mu == al ? eta(mu) : 0);
        if (c == 0 || mu == nu) continue;
        comp += wedge(m_lower(mu, nu), P(al)).scaled(Scalar(GaussRat(ratio(c, 2)), kinv));
      }
  Tensor2 direct;
  for (int mu = 1; mu < 4; ++mu) direct += wedge(m_lower(0, mu), p_upper(mu)).scaled(Scalar(GaussRat(1), kinv));
  if (!(comp == direct)) throw Error("r_kappa component form does not re-sum to (1/kappa) M_{0mu}^P^mu");
  return WedgeBivector(comp);
}

WedgeBivector r_kappa_hat() {
  return WedgeBivector::wedge(m_lower(1, 2), P(0)).scaled(
      Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::khinv)));
}

WedgeBivector r_xi() {
  return WedgeBivector::wedge(P(3), P(0)).scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::xi)));
}

WedgeTrivector mybe_rhs() {
  WedgeTrivector sum;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      sum = sum + WedgeTrivector::wedge(m_lower(mu, nu), p_upper(mu), p_upper(nu));
  return WedgeTrivector(sum.tensor().scaled(Scalar::param(Param::kinv, 2)));
}

}  // namespace twistkit
