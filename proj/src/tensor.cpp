#include "twistkit/tensor.hpp"

namespace twistkit {

Tensor2 tensor(const Element& a, const Element& b) {
  Tensor2 r;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms())
      r.add_term(Tensor2::Key{{ka.legs[0], kb.legs[0]}, ka.params * kb.params}, va * vb);
  return r;
}

Tensor3 tensor(const Tensor2& a, const Element& b) {
  Tensor3 r;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms())
      r.add_term(Tensor3::Key{{ka.legs[0], ka.legs[1], kb.legs[0]}, ka.params * kb.params},
                 va * vb);
  return r;
}

Tensor3 tensor(const Element& a, const Tensor2& b) {
  Tensor3 r;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms())
      r.add_term(Tensor3::Key{{ka.legs[0], kb.legs[0], kb.legs[1]}, ka.params * kb.params},
                 va * vb);
  return r;
}

Tensor2 wedge(const Element& a, const Element& b) { return tensor(a, b) - tensor(b, a); }

Tensor2 flip(const Tensor2& t) {
  Tensor2 r;
  for (const auto& [k, v] : t.terms())
    r.add_term(Tensor2::Key{{k.legs[1], k.legs[0]}, k.params}, v);
  return r;
}

}  // namespace twistkit
