#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistkit/errors.hpp"
#include "twistkit/tensor.hpp"

namespace twistkit {

/// An associative algebra given by generators and a commutation table.
///
/// For every ordered pair g > h the table stores the normal-ordered value of
/// [g, h]; missing pairs commute. Words are in normal form when their letters
/// are non-decreasing in the generator order, and rewriting g·h -> h·g + [g,h]
/// must terminate (true for every presentation shipped in the registry).
///
/// Normal forms of generator-times-word products are memoised; the cache is
/// internally synchronised so a Presentation can be shared across threads.
class Presentation {
 public:
  Presentation(std::string name, std::vector<Gen> generators, TruncationPolicy policy);

  const std::string& name() const { return name_; }
  const std::vector<Gen>& generators() const { return generators_; }
  const TruncationPolicy& policy() const { return policy_; }
  bool contains(Gen g) const { return gen_set_.count(g) != 0; }

  /// Records [g, h] = value for g != h (the antisymmetric partner is implied).
  void set_commutator(Gen g, Gen h, const Element& value);
  /// Table value of [g, h] for generators (zero when commuting).
  Element table_commutator(Gen g, Gen h) const;
  const std::map<std::pair<Gen, Gen>, Element>& table() const { return table_; }

  /// Normal form of an arbitrary (not necessarily ordered) linear combination.
  template <std::size_t R>
  Tensor<R> normal_order(const Tensor<R>& raw) const;

  template <std::size_t R>
  Tensor<R> multiply(const Tensor<R>& a, const Tensor<R>& b) const;

  template <std::size_t R>
  Tensor<R> commutator(const Tensor<R>& a, const Tensor<R>& b) const {
    return multiply(a, b) - multiply(b, a);
  }

  /// Normal form of the product of two normal words (unit coefficient).
  Element multiply_words(const Word& u, const Word& v) const;

  /// Throws UnknownGenerator / TruncationConflict when `e` cannot live here.
  template <std::size_t R>
  void validate(const Tensor<R>& e) const;

 private:
  const Element& gen_times_word(Gen g, const Word& w) const;
  Element normal_word(const Word& w) const;

  std::string name_;
  std::vector<Gen> generators_;
  std::set<Gen> gen_set_;
  TruncationPolicy policy_;
  std::map<std::pair<Gen, Gen>, Element> table_;  // key (g,h) with g > h

  struct CacheKeyHash {
    std::size_t operator()(const std::pair<Gen, Word>& k) const noexcept;
  };
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::pair<Gen, Word>, Element, CacheKeyHash> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// ---------------------------------------------------------------------------

template <std::size_t R>
void Presentation::validate(const Tensor<R>& e) const {
  for (const auto& [k, v] : e.terms()) {
    for (const auto& w : k.legs)
      for (Gen g : w)
        if (!contains(g))
          throw UnknownGenerator("generator " + g.name() + " is not part of presentation " + name_);
    if (!policy_.keeps(k.params))
      throw TruncationConflict("operand carries terms beyond the truncation policy of " + name_ +
                               " (" + policy_.describe() + ")");
  }
}

template <std::size_t R>
Tensor<R> Presentation::normal_order(const Tensor<R>& raw) const {
  Tensor<R> out;
  for (const auto& [k, v] : raw.terms()) {
    if (!policy_.keeps(k.params)) continue;
    // Normalise each leg independently and expand the product of sums.
    std::vector<Element> legs;
    legs.reserve(R);
    for (const auto& w : k.legs) legs.push_back(normal_word(w));
    Tensor<R> acc = Tensor<R>::scalar(Scalar(v, k.params));
    for (std::size_t leg = 0; leg < R; ++leg) {
      Tensor<R> next;
      for (const auto& [ak, av] : acc.terms())
        for (const auto& [lk, lv] : legs[leg].terms()) {
          auto key = ak;
          key.legs[leg] = lk.legs[0];
          key.params = ak.params * lk.params;
          if (policy_.keeps(key.params)) next.add_term(key, av * lv);
        }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

template <std::size_t R>
Tensor<R> Presentation::multiply(const Tensor<R>& a, const Tensor<R>& b) const {
  validate(a);
  validate(b);
  Tensor<R> out;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      const ParamMono pm = ka.params * kb.params;
      if (!policy_.keeps(pm)) continue;
      Tensor<R> acc = Tensor<R>::scalar(Scalar(va * vb, pm));
      for (std::size_t leg = 0; leg < R; ++leg) {
        const auto& ua = ka.legs[leg];
        const auto& ub = kb.legs[leg];
        Element prod;
        if (ua.empty() || ub.empty()) {
          Word w = ua.empty() ? ub : ua;
          prod = Element::word({w});
        } else {
          prod = multiply_words(ua, ub);
        }
        Tensor<R> next;
        for (const auto& [ak, av] : acc.terms())
          for (const auto& [pk, pv] : prod.terms()) {
            auto key = ak;
            key.legs[leg] = pk.legs[0];
            key.params = ak.params * pk.params;
            if (policy_.keeps(key.params)) next.add_term(key, av * pv);
          }
        acc = std::move(next);
      }
      out += acc;
    }
  return out;
}

}  // namespace twistkit
