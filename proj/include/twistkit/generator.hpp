#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistkit {

/// Generator families. The numeric value is the family's rank in the
/// normal-ordering total order: rotation/boost families come first, then
/// momenta, then coordinate-like families.
enum class Family : std::uint8_t {
  M = 0,     // Lorentz M^{mu nu}, stored with mu < nu
  V = 1,     // Galilei boosts V^i
  K = 2,     // Galilei rotations K^{ij}, i < j
  P = 3,     // momenta P_mu
  Pi = 4,    // Galilei momenta Pi_mu
  x = 5,     // coordinates x_mu
  d = 6,     // derivatives d^mu = d/dx_mu
  Lam = 7,   // Lorentz group entries Lambda^mu_nu
  a = 8,     // translations a^mu
  R = 9,     // Galilei rotations R^i_j
  v = 10,    // Galilei boosts v^i
  tau = 11,  // Galilei time translation
  b = 12,    // Galilei space translations b^i
};

/// A single algebra generator: family plus up to two indices, packed so that
/// the natural integer order is the normal-ordering order.
class Gen {
 public:
  constexpr Gen() = default;
  constexpr Gen(Family f, int i = 0, int j = 0)
      : code_(static_cast<std::uint16_t>((static_cast<unsigned>(f) << 8) | (i << 4) | j)) {}

  constexpr Family family() const { return static_cast<Family>(code_ >> 8); }
  constexpr int i() const { return (code_ >> 4) & 0xF; }
  constexpr int j() const { return code_ & 0xF; }
  constexpr std::uint16_t code() const { return code_; }

  constexpr auto operator<=>(const Gen&) const = default;
  constexpr bool operator==(const Gen&) const = default;

  std::string name() const;

 private:
  std::uint16_t code_ = 0;
};

/// Sign-carrying reference to an antisymmetric generator such as M^{mu nu}.
struct SignedGen {
  int sign = 0;  // 0 means the generator vanishes (repeated index)
  Gen gen;
};

/// Canonical M^{mu nu}: returns the generator with mu < nu and the sign that
/// relates it to the requested index order.
SignedGen lorentz(int mu, int nu);
/// Canonical K^{ij} (Galilei rotations).
SignedGen galilei_rotation(int i, int j);

int index_count(Family f);
int index_min(Family f);
int index_max(Family f);
bool antisymmetric(Family f);
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Parses text such as "M[1,2]", "P[0]", "tau" into a signed generator.
/// Throws ParseError on range errors.
SignedGen gen_from_parts(Family f, const std::vector<int>& indices);

using Word = std::vector<Gen>;

std::string word_name(const Word& w);

struct GenHash {
  std::size_t operator()(const Gen& g) const noexcept { return g.code(); }
};

}  // namespace twistkit
