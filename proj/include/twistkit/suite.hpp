#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twistkit/report.hpp"
#include "twistkit/scalar.hpp"
#include "twistkit/star.hpp"

namespace twistkit {

/// Schouten brackets of the registered r-matrices: [[r_κ,r_κ]] against the
/// modified right-hand side, CYBE for r_ξ and r_κ̂, the symmetrised mixed
/// brackets for each ordered pair and MYBE for the sum.
Report check_ybe_suite();

/// Cocycle and normalization for F_{ξ,κ} and F_{κ̂,κ} over κ-Poincaré, and the
/// flat twist as a negative control (must leave a ξκ⁻¹ residual).
Report check_cocycles(const TruncationPolicy& policy = TruncationPolicy::defaults());

/// Coordinate commutators under ⋆κ, ⋆κ,ξ and ⋆κ,κ̂ against the closed forms.
Report check_star_tables(const StarOptions& options = {});

/// Hopf axioms for every registered Hopf algebra.
Report check_registered_hopf_axioms(const TruncationPolicy& policy = TruncationPolicy::defaults());

/// Parses back every registered table.
Report check_registry_roundtrip(const TruncationPolicy& policy = TruncationPolicy::defaults());

inline constexpr int kReportSchemaVersion = 1;

struct SuiteConfig {
  TruncationPolicy policy = TruncationPolicy::defaults();
  std::vector<std::string> sections;  // empty: every section
  StarOptions star;
  int jobs = 0;  // 0: hardware concurrency
};

/// Section names in dependency order: ybe, cocycle, twist, star, poisson,
/// contraction, hopf, casimir, registry.
std::vector<std::string> suite_sections();

/// Runs the selected sections (independent sections concurrently) and
/// returns the entries sorted by id. Throws RegistryError for unknown
/// section names.
Report run_verify_suite(const SuiteConfig& config = {});

bool any_failure(const Report& r);

/// Versioned machine-readable report. Timing lives under "seconds" only.
nlohmann::json report_json(const Report& r, const nlohmann::json& config = nlohmann::json::object());
/// One line per entry, followed by indented detail for non-passing ones.
std::string report_text(const Report& r, bool verbose = false);

}  // namespace twistkit
