#include <doctest.h>

#include "twistkit/poincare.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/rmatrix.hpp"

using namespace twistkit;

namespace {

const LieAlgebra& poincare() {
  static const LieAlgebra g = LieAlgebra::classical_poincare();
  return g;
}

Scalar kinv(int n) { return Scalar::param(Param::kinv, n); }

}  // namespace

TEST_CASE("structure constants satisfy Jacobi") { CHECK(poincare().jacobi_failures().empty()); }

TEST_CASE("registered r-matrices against their hand-written forms") {
  // (1/κ) M_{0i}∧P^i with M_{0i} = -M^{0i} and P^i = P_i.
  Tensor2 rk;
  for (int i = 1; i <= 3; ++i) rk -= wedge(M(0, i), P(i)).scaled(kinv(1));
  CHECK(r_kappa().tensor() == rk);
  CHECK(r_xi().tensor() == (tensor(P(3), P(0)) - tensor(P(0), P(3))).scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::xi))));
  CHECK(r_kappa_hat().tensor() ==
        wedge(M(1, 2), P(0)).scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::khinv))));
  CHECK_THROWS(WedgeBivector(tensor(P(1), P(2))));
}

TEST_CASE("Schouten square of r_kappa") {
  // M_{μν}∧P^μ∧P^ν over μ<ν: boosts pick up η00 twice, rotations none.
  WedgeTrivector want;
  for (int i = 1; i <= 3; ++i) want = want + WedgeTrivector::wedge(M(0, i), P(0), P(i));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) want = want + WedgeTrivector::wedge(M(i, j), P(i), P(j));
  want = WedgeTrivector(want.tensor().scaled(kinv(2)));
  CHECK(schouten(r_kappa(), r_kappa(), poincare()) == want);
  CHECK(mybe_rhs() == want);
}

TEST_CASE("classical Yang-Baxter equation") {
  CHECK(schouten(r_xi(), r_xi(), poincare()).is_zero());
  CHECK(schouten(r_kappa_hat(), r_kappa_hat(), poincare()).is_zero());
  CHECK(check_cybe("t.xi", r_xi(), poincare()).status == Status::pass);
  CHECK(check_cybe("t.hat", r_kappa_hat(), poincare()).status == Status::pass);
  const ReportEntry bad = check_cybe("t.kappa", r_kappa(), poincare());
  CHECK(bad.status == Status::fail);
  CHECK(bad.residual == mybe_rhs().render());
}

TEST_CASE("modified Yang-Baxter equation") {
  CHECK(check_mybe("t", r_kappa(), mybe_rhs(), poincare()).status == Status::pass);
  CHECK(check_mybe("t", registered_rmatrix("r_total"), mybe_rhs(), poincare()).status == Status::pass);
  CHECK(check_mybe("t", WedgeBivector(), WedgeTrivector(), poincare()).status == Status::pass);
  const ReportEntry off = check_mybe("t", r_kappa().scaled(Scalar(GaussRat(2))), mybe_rhs(), poincare());
  CHECK(off.status == Status::fail);
  CHECK_FALSE(off.residual.empty());
}

TEST_CASE("mixed Schouten brackets") {
  const WedgeBivector rs[] = {r_kappa(), r_kappa_hat(), r_xi()};
  for (const auto& a : rs)
    for (const auto& b : rs)
      if (!(a == b)) CHECK(schouten(a, b, poincare()).is_zero());
  // The one-sided form is not antisymmetric for distinct arguments.
  const Tensor3 one_sided = schouten_leg_form(r_kappa(), r_xi(), poincare());
  CHECK_FALSE(one_sided.is_zero());
  CHECK_THROWS(WedgeTrivector{one_sided});
  CHECK(one_sided == schouten_component_form(r_kappa(), r_xi(), poincare()));
}
