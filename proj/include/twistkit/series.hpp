#pragma once

#include <functional>

#include "twistkit/presentation.hpp"

namespace twistkit {

/// Sum over n >= n0 of coeff(n) * (step^n * offset) * g^n. Stops as soon as the
/// parameter monomial leaves the policy; throws SeriesDiverges when that never
/// happens.
Element monomial_series(Gen g, const ParamMono& step, const ParamMono& offset,
                        const std::function<GaussRat(int)>& coeff, int n0,
                        const TruncationPolicy& policy);

Rational factorial(int n);
/// Generalised binomial coefficient binom(a, n) for rational a.
Rational binomial(const Rational& a, int n);

// Functions of s*p*g where p is a deformation parameter (for instance
// exp(-P0/kappa) is exp_series(P0, kinv, -1)).
Element exp_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);
/// (exp(s p g) - 1) / p, written without negative exponents of p.
Element expm1_over(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);
Element sin_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);
Element cos_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);
Element sinh_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);
Element cosh_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy);

inline constexpr int kMaxSeriesTerms = 96;

/// exp(t) = sum t^n / n! in the given presentation; t must be nilpotent under
/// the truncation policy.
template <std::size_t R>
Tensor<R> exp_tensor(const Presentation& p, const Tensor<R>& t) {
  Tensor<R> sum = Tensor<R>::unit();
  Tensor<R> power = Tensor<R>::unit();
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    power = p.multiply(power, t).scaled(Scalar(GaussRat(ratio(1, n))));
    if (power.is_zero()) return sum;
    sum += power;
  }
  throw SeriesDiverges("exponential does not terminate under policy " + p.policy().describe());
}

/// Sum coeff(n) t^n for n >= 0 with the same termination rule.
template <std::size_t R>
Tensor<R> power_series(const Presentation& p, const Tensor<R>& t,
                       const std::function<GaussRat(int)>& coeff) {
  Tensor<R> sum = Tensor<R>::unit() * coeff(0);
  Tensor<R> power = Tensor<R>::unit();
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    power = p.multiply(power, t);
    if (power.is_zero()) return sum;
    sum += power * coeff(n);
  }
  throw SeriesDiverges("power series does not terminate under policy " + p.policy().describe());
}

/// Inverse of an element whose constant term is a nonzero number and whose
/// remaining terms are nilpotent under the policy.
Element series_inverse(const Presentation& p, const Element& u);

/// Σ (1/n!) ad_t^n (x): the adjoint action of exp(t).
template <std::size_t R>
Tensor<R> adjoint_exp(const Presentation& p, const Tensor<R>& t, const Tensor<R>& x) {
  Tensor<R> sum = x;
  Tensor<R> term = x;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    term = p.commutator(t, term).scaled(Scalar(GaussRat(ratio(1, n))));
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw SeriesDiverges("adjoint series does not terminate under policy " + p.policy().describe());
}

}  // namespace twistkit
