#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/report.hpp"
#include "twistkit/rmatrix.hpp"

namespace twistkit {

/// Commutative ring of coordinate functions on the Poincaré group: the entries
/// Λ^μ_ν (generator L[mu,nu]) and the translations a^μ.
PresentationPtr group_ring();
std::vector<Gen> group_generators();  // L[0,0]..L[3,3], a[0]..a[3]

Element Lam(int mu, int nu);      // Λ^μ_ν
Element Lam_up(int mu, int nu);   // Λ^{μν} = Λ^μ_ρ η^{ρν}
Element Lam_low(int mu, int nu);  // Λ_{μν} = η_{μρ} Λ^ρ_ν
Element A(int mu);                // a^μ
Element A_low(int mu);            // a_μ

/// First-order derivation Σ components[v] ∂/∂v.
struct VectorField {
  std::string label;
  std::map<Gen, Element> components;
};

enum class Chirality { left, right };

/// X^{αβ}_{L,R} and X^α_{L,R}.
VectorField lorentz_field(int alpha, int beta, Chirality c);
VectorField translation_field(int alpha, Chirality c);
/// Field realising an algebra basis element: M[μ,ν] -> X^{μν}, P[μ] -> η_μμ X^μ
/// (P carries a lower index). Throws UnknownGenerator for anything else.
VectorField basis_field(Gen g, Chirality c);

Element derivative(const Element& f, Gen v);
Element apply_field(const VectorField& X, const Element& f);

/// {f,g} = 2 r^{AB} (X^R_A f X^R_B g − X^L_A f X^L_B g) where r = r^{AB} T_A∧T_B
/// summed over all A, B, i.e. the stored tensor components t^{AB} = 2 r^{AB}.
Element sklyanin_bracket(const Element& f, const Element& g, const WedgeBivector& r);

/// Values of [g, h] for generator pairs g < h.
using CommutatorTable = std::map<std::pair<Gen, Gen>, Element>;

/// [f, g] := i {f, g} on every generator pair.
CommutatorTable quantize_bracket_table(const WedgeBivector& r);
/// Table value of [g, h] for any ordered pair.
Element table_value(const CommutatorTable& t, Gen g, Gen h);
/// [g, F] = Σ_v ∂F/∂v [g, v]; exact to the order at which products of table
/// values start to matter (the values are treated as commuting).
Element commutator_with(const CommutatorTable& t, Gen g, const Element& f);
/// [g,[h,k]] + cyclic for all generator triples, reduced modulo orthogonality.
std::vector<std::string> table_jacobi_failures(const CommutatorTable& t);

/// Normal form modulo the orthogonality relations ΛᵀηΛ = η, ΛηΛᵀ = η⁻¹:
/// remainder against the fully reduced span of all monomial multiples of the
/// relations up to the degree of f (graded lex order, fixed).
Element reduce_orthogonality(const Element& f);
bool equal_mod_orthogonality(const Element& a, const Element& b);

/// A rational point of the group: Λ from the Cayley transform (1−W)⁻¹(1+W),
/// W = ηS with S antisymmetric, plus a translation.
struct GroupPoint {
  std::array<std::array<Rational, 4>, 4> lam;
  std::array<Rational, 4> a;
};
/// s = (S01, S02, S03, S12, S13, S23).
GroupPoint cayley_point(const std::array<Rational, 6>& s, const std::array<Rational, 4>& a);
/// Substitutes the point; the result only carries deformation parameters.
Element evaluate(const Element& f, const GroupPoint& p);

/// Relations as printed for the κ-deformed group and for its (κ̂,ξ) extension.
CommutatorTable kappa_group_reference();
CommutatorTable extended_group_reference();

/// Coproduct, antipode and counit of the group coordinates (undeformed).
/// `standard` uses S(Λ) = Λ⁻¹ and S(a^μ) = −(Λ⁻¹)^μ_ν a^ν; otherwise the
/// printed S(Λ^μ_ν) = Λ^μ_ν and S(a^μ) = −Σ_ν Λ^μ_ν a^μ.
struct GroupHopfTable {
  std::map<Gen, Tensor2> coproduct;
  std::map<Gen, Element> antipode;
  std::map<Gen, GaussRat> counit;
};
GroupHopfTable group_hopf(bool standard);
/// m(S⊗1)Δ(g) − ε(g) reduced modulo orthogonality, per generator.
std::map<Gen, Element> group_antipode_residuals(const GroupHopfTable& h);

/// Report entries comparing quantize_bracket_table(r_κ + r_κ̂ + r_ξ) with the
/// reference tables, plus the degenerations.
Report check_poisson_quantization();

}  // namespace twistkit
