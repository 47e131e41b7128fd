#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "twistkit/generator.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit {

/// Finite linear combination of rank-`Rank` tensor words with Scalar
/// coefficients. Rank 1 is an ordinary algebra element.
///
/// The container itself only guarantees that no key repeats and that no
/// coefficient is zero; normal ordering of the words is the job of the
/// Presentation that produced the value.
template <std::size_t Rank>
class Tensor {
 public:
  using Legs = std::array<Word, Rank>;
  struct Key {
    Legs legs;
    ParamMono params;
    auto operator<=>(const Key&) const = default;
    bool operator==(const Key&) const = default;
  };
  using Terms = std::map<Key, GaussRat>;

  Tensor() = default;

  static Tensor unit() { return scalar(Scalar(GaussRat(1))); }
  static Tensor scalar(const Scalar& s) {
    Tensor t;
    t.add_term(Legs{}, s);
    return t;
  }
  static Tensor word(const Legs& legs, const Scalar& s = Scalar(GaussRat(1))) {
    Tensor t;
    t.add_term(legs, s);
    return t;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Legs& legs, const Scalar& s) { add_term(Key{legs, s.params}, s.value); }
  void add_term(const Key& key, const GaussRat& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  Tensor operator+(const Tensor& o) const { return Tensor(*this) += o; }
  Tensor operator-(const Tensor& o) const { return Tensor(*this) -= o; }
  Tensor operator-() const { return scaled(Scalar(GaussRat(-1))); }

  Tensor scaled(const Scalar& s) const {
    Tensor r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(Key{k.legs, k.params * s.params}, v * s.value);
    return r;
  }
  Tensor operator*(const GaussRat& g) const { return scaled(Scalar(g)); }

  /// Drops terms rejected by the policy.
  Tensor truncated(const TruncationPolicy& policy) const {
    Tensor r;
    for (const auto& [k, v] : terms_)
      if (policy.keeps(k.params)) r.terms_.emplace(k, v);
    return r;
  }

  /// Keeps only terms for which the predicate on the parameter monomial holds.
  Tensor filtered(const std::function<bool(const ParamMono&)>& keep) const {
    Tensor r;
    for (const auto& [k, v] : terms_)
      if (keep(k.params)) r.terms_.emplace(k, v);
    return r;
  }

  /// Sets a parameter to zero: drops every term with a positive exponent of p.
  /// Terms with negative exponents of p make the operation ill-defined.
  Tensor with_param_zero(Param p) const;

  /// Applies `f` to every leg word independently and recombines.
  template <typename F>
  Tensor map_terms(F&& f) const {
    Tensor r;
    for (const auto& [k, v] : terms_) r += f(k, v);
    return r;
  }

  /// Largest exponent of p over all terms (0 when empty).
  int max_degree(Param p) const;
  int min_degree(Param p) const;

  bool operator==(const Tensor& o) const { return terms_ == o.terms_; }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

using Element = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

template <std::size_t Rank>
Tensor<Rank> Tensor<Rank>::with_param_zero(Param p) const {
  Tensor r;
  for (const auto& [k, v] : terms_) {
    if (k.params[p] < 0) throw std::invalid_argument("with_param_zero on a Laurent term");
    if (k.params[p] == 0) r.terms_.emplace(k, v);
  }
  return r;
}

template <std::size_t Rank>
int Tensor<Rank>::max_degree(Param p) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (first || k.params[p] > m) m = k.params[p];
    first = false;
  }
  return m;
}

template <std::size_t Rank>
int Tensor<Rank>::min_degree(Param p) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (first || k.params[p] < m) m = k.params[p];
    first = false;
  }
  return m;
}

inline Element gen_element(Gen g, const Scalar& s = Scalar(GaussRat(1))) {
  return Element::word({Word{g}}, s);
}
inline Element gen_element(const SignedGen& g) {
  if (g.sign == 0) return {};
  return Element::word({Word{g.gen}}, Scalar(GaussRat(g.sign)));
}

/// a ⊗ b (no normal ordering needed: legs are independent).
Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Tensor2& a, const Element& b);
Tensor3 tensor(const Element& a, const Tensor2& b);

/// a∧b = a⊗b − b⊗a.
Tensor2 wedge(const Element& a, const Element& b);

/// Leg-swap τ(a⊗b) = b⊗a.
Tensor2 flip(const Tensor2& t);

}  // namespace twistkit
