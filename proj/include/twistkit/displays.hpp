#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twistkit/hopf.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

/// Alphabet in which the printed twisted tables are written: momenta,
/// rotations, boosts and the three deformation parameters. The relativistic
/// and the contracted tables share their closed forms, so one transcription
/// serves both.
struct DisplayFrame {
  PresentationPtr alg;
  std::function<Element(int)> mom;          // P_μ or Π_μ
  std::function<Element(int, int)> rot;     // M^{ij} or K^{ij}, zero for i = j
  std::function<Element(int)> boost;        // M^{i0} or V^i
  std::string boost_label;                  // "M[i,0]" style prefix
  std::string rot_label;
  std::string mom_label;
  Param kinv, xi, khinv;
  Element boost_bracket;  // the i-independent part of [boost^i, mom_i]
};

DisplayFrame poincare_frame(PresentationPtr alg);
DisplayFrame galilei_frame(PresentationPtr alg);

struct CoproductDisplay {
  std::string label;
  Element generator;
  Tensor2 printed;
};

struct AntipodeDisplay {
  std::string label;
  Element generator;
  Element printed;
};

/// Printed coproducts and antipodes for the canonical twist, given the
/// untwisted Hopf structure they are written against.
std::vector<CoproductDisplay> printed_xi_coproducts(const HopfPresentation& base, const DisplayFrame& f);
std::vector<AntipodeDisplay> printed_xi_antipodes(const HopfPresentation& base, const DisplayFrame& f);
/// Printed u-element exp(iκξ P3 (e^{P0/κ} − 1)).
Element printed_u_xi(const DisplayFrame& f);

/// Printed coproducts for the Lie twist, with a⊥b read as a⊗b + b⊗a.
std::vector<CoproductDisplay> printed_hat_coproducts(const HopfPresentation& base, const DisplayFrame& f);

/// Engine output of twisted coproducts (and antipodes) against the displays.
Report compare_coproducts(const std::string& prefix, const HopfPresentation& twisted,
                          const std::vector<CoproductDisplay>& displays, const std::string& note = {});
Report compare_antipodes(const std::string& prefix, const HopfPresentation& twisted,
                         const std::vector<AntipodeDisplay>& displays);

Report check_twisted_coproducts(const TruncationPolicy& policy = TruncationPolicy::defaults());
Report check_twisted_antipodes(const TruncationPolicy& policy = TruncationPolicy::defaults());
/// Both Casimir variants against every generator of the κ-Poincaré algebra.
Report check_casimir(const TruncationPolicy& policy = TruncationPolicy::defaults());

}  // namespace twistkit
