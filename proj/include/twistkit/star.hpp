#pragma once

#include <array>
#include <string>
#include <vector>

#include "twistkit/presentation.hpp"

namespace twistkit {

/// Commutative polynomial ring in x_0..x_3 (lower-index coordinates).
PresentationPtr coordinate_ring();
Element X(int mu);

/// One term of a bidifferential exponent: coefficient times external factor
/// `ext` (never differentiated), and on each leg first the derivatives
/// ∂^μ = ∂/∂x_μ listed in `deriv`, then multiplication by `mult`.
struct DiffTerm {
  GaussRat coef;
  ParamMono params;
  Word ext;
  std::array<Word, 2> deriv;
  std::array<Word, 2> mult;
};

struct StarFactor {
  std::string label;
  std::vector<DiffTerm> exponent;  // the factor is exp(Σ terms)
};

enum class StarKind { kappa, xi, hat, kappa_xi, kappa_hat };

std::string star_kind_name(StarKind k);
StarKind star_kind_from_name(const std::string& name);

/// Second-order γ coefficient: the displayed 1/12 normalisation, or the one
/// that makes ⋆κ associative through κ⁻² (−4i times the displayed value).
enum class GammaSecond { displayed, associative };

/// Order in which a composite applies its factors to f⊗g. `displayed` reads
/// O_t∘O_κ as ordinary composition (O_κ acts first); `twist_first` lets the
/// twist factor act on the arguments before O_κ.
enum class Composition { displayed, twist_first };

struct StarOptions {
  int gamma_order = 1;
  int derivative_bound = 8;  // series in ∂0 kept up to this order
  GammaSecond second = GammaSecond::displayed;
  Composition composition = Composition::displayed;
};

/// Product of exponential factors, stored in application order.
struct StarOperator {
  StarKind kind = StarKind::kappa;
  StarOptions options;
  std::vector<StarFactor> factors;
};

/// gamma_order ∈ {1, 2}. `derivative_bound` caps the ∂0 series of O_ξ, which
/// is exact on polynomials of degree ≤ bound in x_0.
StarOperator build_star_operator(StarKind kind, const StarOptions& options = {});

Element star_multiply(const Element& f, const Element& g, const StarOperator& op);
Element star_commutator(const Element& f, const Element& g, const StarOperator& op);

/// Rendering of the exponent terms, e.g. "I*kinv/2*x[1] d[0] ox d[1]".
std::string describe(const StarOperator& op);

}  // namespace twistkit
