#pragma once

#include "twistkit/hopf.hpp"

namespace twistkit {

/// η = diag(-1, 1, 1, 1).
inline int eta(int mu) { return mu == 0 ? -1 : 1; }
inline int delta(int a, int b) { return a == b ? 1 : 0; }

Element P(int mu);
Element M(int mu, int nu);  // signed canonical M^{mu nu}
/// P1^2 + P2^2 + P3^2.
Element p_vec_squared();

std::vector<Gen> poincare_generators();

/// κ/2 (1 - e^{-2P0/κ}) + P⃗²/(2κ), the recurring boost-momentum function.
Element boost_function(const TruncationPolicy& policy);

/// Commutation table of U_κ(P); with kinv truncated to 0 it is classical.
PresentationPtr kappa_poincare_algebra(const TruncationPolicy& policy);
PresentationPtr classical_poincare_algebra(const TruncationPolicy& policy);

HopfPresentation kappa_poincare(const TruncationPolicy& policy);
HopfPresentation classical_poincare(const TruncationPolicy& policy);

/// Twist exponents: iκ(ξ/2) P3⊗(e^{-P0/κ}-1), (i/2κ̂) M12∧P0, and the flat
/// −i(ξ/2) P3⊗P0.
Tensor2 twist_exponent_xi(const TruncationPolicy& policy);
Tensor2 twist_exponent_hat();
Tensor2 twist_exponent_flat();

Twist twist_xi_kappa(const Presentation& p);
Twist twist_hat_kappa(const Presentation& p);

/// U_κ(P) twisted by F_{ξ,κ} and by F_{κ̂,κ}.
HopfPresentation kappa_poincare_xi(const TruncationPolicy& policy);
HopfPresentation kappa_poincare_hat(const TruncationPolicy& policy);

/// Casimir (2κ sinh(P0/(2κ)))² − e^{P0/κ} P⃗² (`half` = true) or the variant
/// with sinh(P0/κ).
Element kappa_casimir(bool half, const TruncationPolicy& policy);

}  // namespace twistkit
