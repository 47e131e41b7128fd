#pragma once

#include <random>
#include <vector>

#include "twistkit/presentation.hpp"

namespace testing_support {

using namespace twistkit;

inline constexpr int kCases = 200;

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int span = 5) {
    const int num = uniform(-span, span);
    const int den = uniform(1, span);
    return ratio(num == 0 ? 1 : num, den);
  }
  GaussRat gauss(bool complex = true) {
    GaussRat g(rational(), complex && coin() ? rational() : Rational(0));
    if (coin()) g = GaussRat(0, rational());
    return g;
  }

  Word word(const std::vector<Gen>& gens, int max_len) {
    Word w;
    const int n = uniform(0, max_len);
    for (int i = 0; i < n; ++i) w.push_back(gens[static_cast<std::size_t>(uniform(0, static_cast<int>(gens.size()) - 1))]);
    return w;
  }

  ParamMono params(const std::vector<std::pair<Param, std::pair<int, int>>>& ranges) {
    ParamMono m;
    for (const auto& [p, r] : ranges)
      if (coin()) m.set(p, uniform(r.first, r.second));
    return m;
  }

  /// Random raw (not normal-ordered) element.
  Element raw_element(const Presentation& p, int terms, int max_len,
                      const std::vector<std::pair<Param, std::pair<int, int>>>& ranges = {}) {
    Element e;
    for (int t = 0; t < terms; ++t)
      e.add_term({word(p.generators(), max_len)}, Scalar(gauss(), params(ranges)));
    return e;
  }

  template <std::size_t R>
  Tensor<R> raw_tensor(const Presentation& p, int terms, int max_len,
                       const std::vector<std::pair<Param, std::pair<int, int>>>& ranges = {}) {
    Tensor<R> t;
    for (int k = 0; k < terms; ++k) {
      typename Tensor<R>::Legs legs;
      for (auto& w : legs) w = word(p.generators(), max_len);
      t.add_term(legs, Scalar(gauss(), params(ranges)));
    }
    return t;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Concatenation without any rewriting.
inline Element concat(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      Word w = ka.legs[0];
      w.insert(w.end(), kb.legs[0].begin(), kb.legs[0].end());
      out.add_term({w}, Scalar(va * vb, ka.params * kb.params));
    }
  return out;
}

}  // namespace testing_support
