#include "twistkit/series.hpp"

namespace twistkit {

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(const Rational& a, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) {
    r *= a - k;
    r /= k + 1;
  }
  return r;
}

Element monomial_series(Gen g, const ParamMono& step, const ParamMono& offset,
                        const std::function<GaussRat(int)>& coeff, int n0,
                        const TruncationPolicy& policy) {
  Element out;
  ParamMono mono = offset;
  for (int n = 0; n < n0; ++n) mono = mono * step;
  for (int n = n0; n <= n0 + kMaxSeriesTerms; ++n, mono = mono * step) {
    if (!policy.keeps(mono)) {
      // Monomials only grow along a bounded direction, so nothing later survives.
      return out;
    }
    const GaussRat c = coeff(n);
    if (!c.is_zero()) out.add_term({Word(static_cast<std::size_t>(n), g)}, Scalar(c, mono));
  }
  throw SeriesDiverges("series in " + g.name() + " does not terminate under policy " +
                       policy.describe());
}

namespace {
GaussRat pow_over_fact(const Rational& s, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= s;
  return GaussRat(r / factorial(n));
}
}  // namespace

Element exp_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(g, ParamMono::of(p), {}, [&](int n) { return pow_over_fact(s, n); }, 0,
                         policy);
}

Element expm1_over(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(g, ParamMono::of(p), ParamMono::of(p, -1),
                         [&](int n) { return pow_over_fact(s, n); }, 1, policy);
}

Element sin_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(
      g, ParamMono::of(p), {},
      [&](int n) {
        if (n % 2 == 0) return GaussRat();
        GaussRat v = pow_over_fact(s, n);
        return ((n - 1) / 2) % 2 ? -v : v;
      },
      0, policy);
}

Element cos_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(
      g, ParamMono::of(p), {},
      [&](int n) {
        if (n % 2 == 1) return GaussRat();
        GaussRat v = pow_over_fact(s, n);
        return (n / 2) % 2 ? -v : v;
      },
      0, policy);
}

Element sinh_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(
      g, ParamMono::of(p), {},
      [&](int n) { return n % 2 ? pow_over_fact(s, n) : GaussRat(); }, 0, policy);
}

Element cosh_series(Gen g, Param p, const Rational& s, const TruncationPolicy& policy) {
  return monomial_series(
      g, ParamMono::of(p), {},
      [&](int n) { return n % 2 ? GaussRat() : pow_over_fact(s, n); }, 0, policy);
}

Element series_inverse(const Presentation& p, const Element& u) {
  GaussRat c0;
  Element rest;
  for (const auto& [k, v] : u.terms()) {
    if (k.legs[0].empty() && k.params.is_one())
      c0 = v;
    else
      rest.add_term(k, v);
  }
  if (c0.is_zero()) throw SeriesDiverges("element has no invertible constant term");
  const GaussRat inv0 = GaussRat(1) / c0;
  const Element n = rest * inv0;
  return power_series<1>(p, n, [](int k) { return GaussRat(k % 2 ? -1 : 1); }) * inv0;
}

}  // namespace twistkit
