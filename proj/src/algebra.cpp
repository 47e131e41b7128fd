#include "twistkit/algebra.hpp"

namespace twistkit {

ParamMono Substitution::map_params(const ParamMono& m, GaussRat& factor) const {
  ParamMono out;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    const int e = m[p];
    if (e == 0) continue;
    auto it = params.find(p);
    if (it == params.end()) {
      out = out * ParamMono::of(p, e);
      continue;
    }
    if (e < 0 && !(it->second.value == GaussRat(1)))
      throw Error("negative power of a parameter with a nontrivial image coefficient");
    for (int k = 0; k < (e < 0 ? -e : e); ++k) {
      out = out * (e < 0 ? it->second.params.inverse() : it->second.params);
      if (e > 0) factor *= it->second.value;
    }
  }
  return out;
}

namespace {

Element substitute_word(const Word& w, const Substitution& s, const Presentation& target) {
  Element acc = Element::unit();
  for (Gen g : w) {
    auto it = s.generators.find(g);
    Element img;
    if (it != s.generators.end()) {
      img = it->second;
    } else {
      if (s.strict) throw UnknownGenerator("no image for generator " + g.name());
      img = gen_element(g);
    }
    acc = target.multiply(acc, img);
  }
  return acc;
}

template <std::size_t R>
Tensor<R> substitute_impl(const Tensor<R>& e, const Substitution& s, const Presentation& target) {
  Tensor<R> out;
  for (const auto& [k, v] : e.terms()) {
    GaussRat factor = v;
    const ParamMono pm = s.map_params(k.params, factor);
    Tensor<R> acc = Tensor<R>::scalar(Scalar(factor, pm));
    for (std::size_t leg = 0; leg < R; ++leg) {
      const Element img = substitute_word(k.legs[leg], s, target);
      Tensor<R> next;
      for (const auto& [ak, av] : acc.terms())
        for (const auto& [ik, iv] : img.terms()) {
          auto key = ak;
          key.legs[leg] = ik.legs[0];
          key.params = ak.params * ik.params;
          next.add_term(key, av * iv);
        }
      acc = std::move(next);
    }
    out += acc;
  }
  return out.truncated(target.policy());
}

}  // namespace

Element substitute(const Element& e, const Substitution& s, const Presentation& target) {
  return substitute_impl(e, s, target);
}
Tensor2 substitute(const Tensor2& e, const Substitution& s, const Presentation& target) {
  return substitute_impl(e, s, target);
}
Tensor3 substitute(const Tensor3& e, const Substitution& s, const Presentation& target) {
  return substitute_impl(e, s, target);
}

GaussRat coefficient(const Element& e, const Word& w, const ParamMono& params) {
  auto it = e.terms().find(Element::Key{{w}, params});
  return it == e.terms().end() ? GaussRat() : it->second;
}

Element multiply_legs(const Presentation& p, const Tensor2& t) {
  Element out;
  for (const auto& [k, v] : t.terms()) {
    Element prod = p.multiply_words(k.legs[0], k.legs[1]);
    out += prod.scaled(Scalar(v, k.params));
  }
  return out.truncated(p.policy());
}

}  // namespace twistkit
