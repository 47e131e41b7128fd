#pragma once

#include <string>
#include <vector>

#include "twistkit/contraction.hpp"
#include "twistkit/hopf.hpp"
#include "twistkit/rmatrix.hpp"

namespace twistkit {

/// Unknown registry names and tables that fail their own consistency checks.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// poincare-classical, kappa-poincare, kappa-poincare-xi, kappa-poincare-hat,
/// kappa-galilei, kappa-galilei-xi, kappa-galilei-hat.
std::vector<std::string> hopf_names();
HopfPresentation registered_hopf(const std::string& name, const TruncationPolicy& policy);

/// The Hopf algebras plus the commutative carriers: coordinates,
/// poincare-group, galilei-group (these ignore the policy).
std::vector<std::string> algebra_names();
PresentationPtr registered_algebra(const std::string& name, const TruncationPolicy& policy);

/// F-xi-kappa, F-hat-kappa, F-flat (all over kappa-poincare).
std::vector<std::string> twist_names();
Twist registered_twist(const std::string& name, const Presentation& p);

/// r_kappa, r_kappa_hat, r_xi, r_total.
std::vector<std::string> rmatrix_names();
WedgeBivector registered_rmatrix(const std::string& name);

/// poincare-to-galilei.
std::vector<std::string> contraction_names();
ContractionSpec registered_contraction(const std::string& name, const TruncationPolicy& policy);

/// Renders every stored table (commutators, coproducts, antipodes, twists,
/// r-matrices, group tables) and parses it back in its own presentation.
/// Returns one line per entry that does not come back identical.
std::vector<std::string> registry_roundtrip_failures(const TruncationPolicy& policy);

}  // namespace twistkit
