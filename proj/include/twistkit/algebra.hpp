#pragma once

#include <map>

#include "twistkit/presentation.hpp"

namespace twistkit {

/// Simultaneous replacement of generators and parameters. Generators without
/// an entry are kept unless `strict` is set, in which case they are an error.
struct Substitution {
  std::map<Gen, Element> generators;
  std::map<Param, Scalar> params;
  bool strict = false;

  ParamMono map_params(const ParamMono& m, GaussRat& factor) const;
};

/// Substitutes into every leg and normal-orders the result in `target`.
Element substitute(const Element& e, const Substitution& s, const Presentation& target);
Tensor2 substitute(const Tensor2& e, const Substitution& s, const Presentation& target);
Tensor3 substitute(const Tensor3& e, const Substitution& s, const Presentation& target);

/// Coefficient of a given word (with trivial parameter monomial unless given).
GaussRat coefficient(const Element& e, const Word& w, const ParamMono& params = {});

/// Sums the legs into one element: m(a ⊗ b) = a·b.
Element multiply_legs(const Presentation& p, const Tensor2& t);

}  // namespace twistkit
