#include "twistkit/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace twistkit {

namespace {
constexpr std::array<std::string_view, kParamCount> kNames = {
    "kinv", "khinv", "xi", "c", "kbar_inv", "khbar_inv", "xibar"};
}

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (kNames[i] == name) return static_cast<Param>(i);
  return std::nullopt;
}

bool ParamMono::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

std::size_t ParamMono::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ static_cast<std::uint16_t>(e)) * 1099511628211ull;
  return h;
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  const GaussRat num = *this * o.conj();
  return {num.re / norm, num.im / norm};
}

GaussRat GaussRat::frac(long num, long den) {
  Rational q(num);
  q /= den;
  return GaussRat(q);
}

TruncationPolicy TruncationPolicy::defaults() {
  TruncationPolicy p;
  p.set(Param::kinv, 4)
      .set(Param::khinv, 4)
      .set(Param::xi, 2)
      .set(Param::xibar, 2)
      .set(Param::kbar_inv, 4)
      .set(Param::khbar_inv, 4);
  return p;
}

TruncationPolicy TruncationPolicy::unbounded() { return TruncationPolicy(); }

std::string TruncationPolicy::describe() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (max_[i] == kUnbounded) continue;
    if (!first) os << ' ';
    os << kNames[i] << ':' << max_[i];
    first = false;
  }
  if (first) os << "unbounded";
  return os.str();
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace twistkit
