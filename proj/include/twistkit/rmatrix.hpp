#pragma once

#include <map>
#include <vector>

#include "twistkit/presentation.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

/// Lie algebra with real structure constants: [T_A, T_B] = i f_AB^C T_C in
/// the Hermitian enveloping presentation, and the wedge calculus below uses
/// the real bracket [T_A, T_B]_f = f_AB^C T_C.
class LieAlgebra {
 public:
  /// Reads the constants off a presentation whose table is linear in the
  /// generators. Throws when an entry is not linear.
  explicit LieAlgebra(PresentationPtr hermitian);

  static LieAlgebra classical_poincare();

  const std::vector<Gen>& basis() const { return basis_; }
  const Presentation& enveloping() const { return *hermitian_; }
  /// f_AB as an element (linear combination of basis generators).
  const Element& f(Gen a, Gen b) const;
  /// Residual of the Jacobi identity over all basis triples (empty if none).
  std::vector<std::string> jacobi_failures() const;

 private:
  PresentationPtr hermitian_;
  std::vector<Gen> basis_;
  std::map<std::pair<Gen, Gen>, Element> f_;
  Element zero_;
};

/// Antisymmetric element of Λ²g stored as the rank-2 tensor Σ r^{AB} T_A⊗T_B.
class WedgeBivector {
 public:
  WedgeBivector() = default;
  /// Throws if `t` is not antisymmetric or has legs that are not single generators.
  explicit WedgeBivector(Tensor2 t);
  static WedgeBivector wedge(const Element& a, const Element& b);

  const Tensor2& tensor() const { return t_; }
  /// Components r^{AB} for A < B, keyed by (A, B, params).
  std::map<std::tuple<Gen, Gen, ParamMono>, GaussRat> components() const;
  WedgeBivector operator+(const WedgeBivector& o) const { return WedgeBivector(t_ + o.t_); }
  WedgeBivector scaled(const Scalar& s) const { return WedgeBivector(t_.scaled(s)); }
  bool operator==(const WedgeBivector& o) const { return t_ == o.t_; }
  bool is_zero() const { return t_.is_zero(); }

 private:
  Tensor2 t_;
};

/// Totally antisymmetric element of Λ³g.
class WedgeTrivector {
 public:
  WedgeTrivector() = default;
  explicit WedgeTrivector(Tensor3 t);
  /// a∧b∧c as the signed sum over the six leg orders.
  static WedgeTrivector wedge(const Element& a, const Element& b, const Element& c);

  const Tensor3& tensor() const { return t_; }
  std::map<std::tuple<Gen, Gen, Gen, ParamMono>, GaussRat> components() const;
  WedgeTrivector operator+(const WedgeTrivector& o) const { return WedgeTrivector(t_ + o.t_); }
  WedgeTrivector operator-(const WedgeTrivector& o) const { return WedgeTrivector(t_ - o.t_); }
  bool operator==(const WedgeTrivector& o) const { return t_ == o.t_; }
  bool is_zero() const { return t_.is_zero(); }
  std::string render() const;

 private:
  Tensor3 t_;
};

/// One-sided bracket [r1_12, r2_13 + r2_23] + [r1_13, r2_23] with the real
/// structure constants, computed in the enveloping algebra (leg placement).
Tensor3 schouten_leg_form(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g);
/// Same bracket contracted directly against the structure constants.
Tensor3 schouten_component_form(const WedgeBivector& r1, const WedgeBivector& r2,
                                const LieAlgebra& g);

/// [[r1, r2]]: symmetrised one-sided bracket ½(B(r1,r2) + B(r2,r1)); equals
/// B(r,r) on the diagonal. Cross-checks both computation routes.
WedgeTrivector schouten(const WedgeBivector& r1, const WedgeBivector& r2, const LieAlgebra& g);

ReportEntry check_cybe(const std::string& id, const WedgeBivector& r, const LieAlgebra& g);
ReportEntry check_mybe(const std::string& id, const WedgeBivector& r, const WedgeTrivector& rhs,
                       const LieAlgebra& g);

// Registered r-matrices.
/// r_κ from the component form r^{μν;α} M_{μν}∧P_α; asserts it re-sums to
/// (1/κ) M_{0μ}∧P^μ.
WedgeBivector r_kappa();
WedgeBivector r_kappa_hat();  // (1/2κ̂) M_12 ∧ P_0
WedgeBivector r_xi();         // (ξ/2) P_3 ∧ P_0
/// (1/κ²) Σ_{μ<ν} M_{μν}∧P^μ∧P^ν.
WedgeTrivector mybe_rhs();

}  // namespace twistkit
