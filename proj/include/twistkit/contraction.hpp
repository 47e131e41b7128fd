#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "twistkit/hopf.hpp"
#include "twistkit/poisson.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

/// Rescaling of generators and parameters by powers of c. Every generator
/// image must be a single target generator times a scalar (which may carry
/// c); the limit c -> ∞ keeps the c⁰ part and refuses positive powers.
struct ContractionSpec {
  std::string name;
  Substitution map;  // source generator / parameter -> target with c powers
  std::vector<Gen> target_generators;
  TruncationPolicy target_policy = TruncationPolicy::defaults();
};

/// P0 -> Π0/c, P_i -> Π_i, M^{ij} -> K^{ij}, M^{i0} -> c V^i and
/// κ⁻¹ -> c κ̄⁻¹, ξ -> c ξ̄, κ̂⁻¹ -> c κ̄̂⁻¹.
ContractionSpec galilei_contraction(const TruncationPolicy& source = TruncationPolicy::defaults());
std::vector<Gen> galilei_generators();  // V1..V3, K12, K13, K23, Π0..Π3

Element V(int i);
Element K(int i, int j);  // signed canonical K^{ij}
Element Pi(int mu);

/// Keeps the c⁰ part; throws DivergentLimit listing the terms with positive
/// powers of c. `what` names the entry in the error.
template <std::size_t R>
Tensor<R> c_limit(const Tensor<R>& e, const std::string& what);

/// Substitutes the spec (without taking the limit).
Element rescale(const Element& e, const ContractionSpec& spec);
Tensor2 rescale(const Tensor2& e, const ContractionSpec& spec);

/// rescale followed by the limit; the result is truncated by the target policy.
Element contract_expression(const Element& e, const ContractionSpec& spec);
Tensor2 contract_expression(const Tensor2& e, const ContractionSpec& spec);

/// Rescaled algebra, coproduct and antipode tables in the limit. The target
/// generator g' = g / s_g, so [g',h'] = lim rescale([g,h]) / (s_g s_h) etc.
HopfPresentation contract_presentation(const HopfPresentation& h, const ContractionSpec& spec,
                                       const std::string& name);

// --- group side --------------------------------------------------------------

/// Commutative ring of Galilei group coordinates R[i,j], v[i], tau, b[i].
PresentationPtr galilei_group_ring();
std::vector<Gen> galilei_group_generators();

/// R^i_j, v^i, τ, b^i as series in the Poincaré coordinates (with c), the
/// boost series truncated at order n in c⁻².
Element group_inverse_image(Gen target, int n);
/// Λ and a in terms of R, v, τ, b and c (the boost-block parametrization with
/// (1 + v̄²/c²)^{1/2} expanded to order n in c⁻²), parameters rescaled.
Element group_forward(const Element& f, int n);
Tensor2 group_forward(const Tensor2& f, int n);

/// Largest power of c any term can carry once substituted, counted factor
/// by factor (no cancellations assumed).
int c_degree_bound(const Element& f);
int c_degree_bound(const Tensor2& f);

/// Galilei group commutators from a Poincaré group table, with the series
/// order chosen per entry by degree counting.
CommutatorTable contract_group_table(const CommutatorTable& t);
/// Contraction of the undeformed coproducts.
std::map<Gen, Tensor2> contract_group_coproducts(const GroupHopfTable& h);

/// A rational point of the Galilei group: R from the Cayley transform of an
/// antisymmetric 3×3 matrix, arbitrary v, τ, b.
struct GalileiPoint {
  std::array<std::array<Rational, 3>, 3> rot;
  std::array<Rational, 3> v;
  Rational tau;
  std::array<Rational, 3> b;
};
GalileiPoint galilei_point(const std::array<Rational, 3>& s, const std::array<Rational, 3>& v,
                           const Rational& tau, const std::array<Rational, 3>& b);
Element evaluate(const Element& f, const GalileiPoint& p);
/// Equality on the group, tested at a fixed set of rational points.
bool equal_on_galilei_group(const Element& a, const Element& b);

/// Contracted algebra relations as printed (the [V,Π_j] entry without i).
CommutatorTable galilei_algebra_reference();

/// Relations as printed for the contracted group.
CommutatorTable galilei_group_reference();
std::map<Gen, Tensor2> galilei_group_coproduct_reference();

// --- registry and checks -----------------------------------------------------

/// κ̄-Galilei, its canonical twist (ξ̄) and Lie twist (κ̄̂) contractions.
HopfPresentation kappa_galilei(const TruncationPolicy& source_policy = TruncationPolicy::defaults());
HopfPresentation kappa_galilei_xi(const TruncationPolicy& source_policy = TruncationPolicy::defaults());
HopfPresentation kappa_galilei_hat(const TruncationPolicy& source_policy = TruncationPolicy::defaults());

/// Contraction report: algebra, coproducts, antipodes, Casimir, the
/// twist/contraction correspondence and the group tables.
Report check_contraction(const TruncationPolicy& policy = TruncationPolicy::defaults());

}  // namespace twistkit
