#pragma once

#include <array>
#include <climits>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistkit {

using Rational = mpq_class;

/// Formal deformation parameters. `c` is the speed of light used by the
/// contraction engine and is the only parameter that routinely carries
/// negative exponents.
enum class Param : std::uint8_t {
  kinv,       // 1/kappa
  khinv,      // 1/kappa-hat
  xi,         // canonical deformation parameter
  c,          // light velocity
  kbar_inv,   // 1/kappa-bar   (contracted)
  khbar_inv,  // 1/kappa-hat-bar (contracted)
  xibar,      // xi-bar (contracted)
};

inline constexpr std::size_t kParamCount = 7;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Laurent monomial in the deformation parameters.
class ParamMono {
 public:
  ParamMono() { exps_.fill(0); }

  static ParamMono of(Param p, int exponent = 1) {
    ParamMono m;
    m.exps_[idx(p)] = static_cast<std::int16_t>(exponent);
    return m;
  }

  int operator[](Param p) const { return exps_[idx(p)]; }
  void set(Param p, int e) { exps_[idx(p)] = static_cast<std::int16_t>(e); }
  bool is_one() const;

  ParamMono operator*(const ParamMono& o) const {
    ParamMono r;
    for (std::size_t i = 0; i < kParamCount; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    return r;
  }
  ParamMono inverse() const {
    ParamMono r;
    for (std::size_t i = 0; i < kParamCount; ++i) r.exps_[i] = -exps_[i];
    return r;
  }

  auto operator<=>(const ParamMono&) const = default;
  bool operator==(const ParamMono&) const = default;

  std::size_t hash() const;

 private:
  static std::size_t idx(Param p) { return static_cast<std::size_t>(p); }
  std::array<std::int16_t, kParamCount> exps_;
};

/// Exact Gaussian rational re + i*im.
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static GaussRat i_unit() { return GaussRat(0, 1); }
  static GaussRat frac(long num, long den);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator-() const { return {-re, -im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat operator/(const GaussRat& o) const;
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat conj() const { return {re, -im}; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

/// Per-parameter maximum degree. Terms whose exponent of a bounded parameter
/// exceeds the bound are dropped. Unbounded parameters are never truncated.
class TruncationPolicy {
 public:
  static constexpr int kUnbounded = INT_MAX;

  /// kinv:4 khinv:4 xi:2 kbar_inv:4 khbar_inv:4 xibar:2, c unbounded.
  static TruncationPolicy defaults();
  static TruncationPolicy unbounded();

  int max_degree(Param p) const { return max_[static_cast<std::size_t>(p)]; }
  TruncationPolicy& set(Param p, int max_degree) {
    max_[static_cast<std::size_t>(p)] = max_degree;
    return *this;
  }
  bool bounded(Param p) const { return max_degree(p) != kUnbounded; }

  /// True when a term with this monomial survives truncation.
  bool keeps(const ParamMono& m) const {
    for (std::size_t i = 0; i < kParamCount; ++i)
      if (m[static_cast<Param>(i)] > max_[i]) return false;
    return true;
  }

  std::string describe() const;
  bool operator==(const TruncationPolicy&) const = default;

 private:
  TruncationPolicy() { max_.fill(kUnbounded); }
  std::array<int, kParamCount> max_;
};

/// Gaussian-rational coefficient times a Laurent monomial.
struct Scalar {
  GaussRat value;
  ParamMono params;

  Scalar() = default;
  Scalar(GaussRat v, ParamMono p = {}) : value(std::move(v)), params(p) {  // NOLINT
    if (value.is_zero()) params = ParamMono{};
  }
  static Scalar param(Param p, int e = 1) { return Scalar(GaussRat(1), ParamMono::of(p, e)); }

  bool is_zero() const { return value.is_zero(); }
  Scalar operator*(const Scalar& o) const { return {value * o.value, params * o.params}; }
};

std::string to_string(const Rational& q);

inline Rational ratio(long num, long den) {
  Rational q(num);
  q /= den;
  return q;
}

}  // namespace twistkit
