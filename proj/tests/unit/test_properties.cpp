#include <doctest.h>

#include "properties.hpp"
#include "twistkit/poisson.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/rmatrix.hpp"

using namespace twistkit;
using testing_support::kCases;

namespace {

const TruncationPolicy kPol = TruncationPolicy::defaults();

void check_property(const testing_support::PropertyResult& r) {
  INFO("first failure: " << r.first);
  CHECK(r.failures == 0);
  CHECK(r.cases >= kCases);
}

}  // namespace

TEST_CASE("property: normal ordering is confluent") { check_property(testing_support::confluence_property()); }

TEST_CASE("property: Jacobi identity in the enveloping algebras") {
  check_property(testing_support::algebra_jacobi_property());
}

TEST_CASE("property: Schouten bracket graded symmetry") { check_property(testing_support::schouten_symmetry_property()); }

TEST_CASE("property: parser round trip on random normal forms") {
  check_property(testing_support::parser_roundtrip_property());
}

TEST_CASE("property: Jacobi identity of the Poisson-Lie bracket on the group") {
  check_property(testing_support::poisson_jacobi_property());

  const auto gens = group_generators();
  // Negative control: M01∧M02 has a Schouten square that is not ad-invariant.
  const WedgeBivector bad = WedgeBivector::wedge(M(0, 1), M(0, 2));
  const auto point = cayley_point({ratio(1, 2), 2, ratio(-1, 3), 1, ratio(1, 5), -1}, {1, 2, 3, 4});
  bool seen = false;
  for (std::size_t a = 0; a < gens.size() && !seen; ++a)
    for (std::size_t b = a + 1; b < gens.size() && !seen; ++b)
      for (std::size_t c = b + 1; c < gens.size() && !seen; ++c) {
        const Element f = gen_element(gens[a]), g = gen_element(gens[b]), h = gen_element(gens[c]);
        const Element jac = sklyanin_bracket(f, sklyanin_bracket(g, h, bad), bad) +
                            sklyanin_bracket(g, sklyanin_bracket(h, f, bad), bad) +
                            sklyanin_bracket(h, sklyanin_bracket(f, g, bad), bad);
        seen = !evaluate(jac, point).is_zero();
      }
  CHECK(seen);
}

TEST_CASE("property: every registered table round-trips through the parser") {
  const auto bad = registry_roundtrip_failures(kPol);
  CHECK(bad.empty());
  for (const auto& b : bad) MESSAGE(b);
}
