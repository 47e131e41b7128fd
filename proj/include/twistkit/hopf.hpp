#pragma once

#include <map>
#include <memory>
#include <string>

#include "twistkit/algebra.hpp"
#include "twistkit/report.hpp"
#include "twistkit/series.hpp"

namespace twistkit {

/// Hopf algebra given by generators: an algebra presentation together with
/// coproduct, antipode and counit values on the generators.
struct HopfPresentation {
  std::string name;
  PresentationPtr algebra;
  std::map<Gen, Tensor2> delta;
  std::map<Gen, Element> antipode;
  std::map<Gen, GaussRat> counit;

  const Presentation& alg() const { return *algebra; }
};
using HopfPtr = std::shared_ptr<const HopfPresentation>;

Tensor2 coproduct(const HopfPresentation& h, const Element& e);
/// (Δ ⊗ 1) and (1 ⊗ Δ) applied to a rank-2 tensor.
Tensor3 coproduct_left(const HopfPresentation& h, const Tensor2& t);
Tensor3 coproduct_right(const HopfPresentation& h, const Tensor2& t);
Element antipode(const HopfPresentation& h, const Element& e);
GaussRat counit(const HopfPresentation& h, const Word& w);
/// (ε ⊗ 1) and (1 ⊗ ε).
Element counit_left(const HopfPresentation& h, const Tensor2& t);
Element counit_right(const HopfPresentation& h, const Tensor2& t);

/// F = exp(t) with its inverse, expanded under the algebra's policy.
struct Twist {
  std::string name;
  Tensor2 exponent;
  Tensor2 F;
  Tensor2 F_inv;
};

Twist make_twist(const std::string& name, const Presentation& p, const Tensor2& exponent);

/// F·T·F^{-1} via the adjoint series of the exponent.
Tensor2 twist_conjugate(const Presentation& p, const Twist& f, const Tensor2& t);
Tensor2 twisted_coproduct(const HopfPresentation& h, const Twist& f, Gen g);
/// u = Σ f1 S(f2).
Element compute_u(const HopfPresentation& h, const Twist& f);
/// Σ S(g1) g2 over F^{-1}; equals u^{-1}.
Element compute_u_inverse(const HopfPresentation& h, const Twist& f);
Element twisted_antipode(const HopfPresentation& h, const Element& u, const Element& u_inv,
                         Gen g);

/// Builds the twisted Hopf algebra (same algebra, conjugated coproducts and
/// antipodes).
HopfPresentation twisted_hopf(const HopfPresentation& h, const Twist& f, const std::string& name);

/// The same Hopf algebra with parameter p set to zero in every table.
HopfPresentation degenerate(const HopfPresentation& h, Param p, const std::string& name);

struct CocycleResult {
  Tensor3 residual;  // F12 (Δ⊗1)F − F23 (1⊗Δ)F
  Element normalization_left;   // (ε⊗1)F − 1
  Element normalization_right;  // (1⊗ε)F − 1
  std::string orders;
  bool ok() const {
    return residual.is_zero() && normalization_left.is_zero() && normalization_right.is_zero();
  }
};

CocycleResult check_cocycle(const HopfPresentation& h, const Twist& f);

/// Coassociativity, counit, antipode and Δ-homomorphism checks per generator.
Report check_hopf_axioms(const HopfPresentation& h);

/// Commutators of e with every generator of the algebra (zero when central).
std::map<Gen, Element> centrality_residuals(const HopfPresentation& h, const Element& e);

}  // namespace twistkit
