#include "twistkit/generator.hpp"

#include <array>

#include "twistkit/errors.hpp"

namespace twistkit {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int indices;
  int lo;
  int hi;
  bool antisym;
};

constexpr std::array<FamilyInfo, 13> kFamilies = {{
    {Family::M, "M", 2, 0, 3, true},
    {Family::V, "V", 1, 1, 3, false},
    {Family::K, "K", 2, 1, 3, true},
    {Family::P, "P", 1, 0, 3, false},
    {Family::Pi, "Pi", 1, 0, 3, false},
    {Family::x, "x", 1, 0, 3, false},
    {Family::d, "d", 1, 0, 3, false},
    {Family::Lam, "L", 2, 0, 3, false},
    {Family::a, "a", 1, 0, 3, false},
    {Family::R, "R", 2, 1, 3, false},
    {Family::v, "v", 1, 1, 3, false},
    {Family::tau, "tau", 0, 0, 0, false},
    {Family::b, "b", 1, 1, 3, false},
}};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

}  // namespace

int index_count(Family f) { return info(f).indices; }
int index_min(Family f) { return info(f).lo; }
int index_max(Family f) { return info(f).hi; }
bool antisymmetric(Family f) { return info(f).antisym; }
std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name) return fi.family;
  return std::nullopt;
}

std::string Gen::name() const {
  const auto& fi = info(family());
  std::string s(fi.name);
  if (fi.indices == 0) return s;
  s += '[';
  s += std::to_string(i());
  if (fi.indices == 2) {
    s += ',';
    s += std::to_string(j());
  }
  s += ']';
  return s;
}

SignedGen lorentz(int mu, int nu) {
  if (mu == nu) return {0, Gen(Family::M, 0, 0)};
  if (mu < nu) return {+1, Gen(Family::M, mu, nu)};
  return {-1, Gen(Family::M, nu, mu)};
}

SignedGen galilei_rotation(int i, int j) {
  if (i == j) return {0, Gen(Family::K, 1, 1)};
  if (i < j) return {+1, Gen(Family::K, i, j)};
  return {-1, Gen(Family::K, j, i)};
}

SignedGen gen_from_parts(Family f, const std::vector<int>& indices) {
  const auto& fi = info(f);
  if (static_cast<int>(indices.size()) != fi.indices)
    throw Error("generator " + std::string(fi.name) + " takes " + std::to_string(fi.indices) +
                " indices");
  for (int k : indices)
    if (k < fi.lo || k > fi.hi)
      throw Error("index " + std::to_string(k) + " out of range for " + std::string(fi.name) +
                  " (" + std::to_string(fi.lo) + ".." + std::to_string(fi.hi) + ")");
  if (fi.indices == 0) return {+1, Gen(f)};
  if (fi.indices == 1) return {+1, Gen(f, indices[0])};
  if (fi.antisym) {
    if (indices[0] == indices[1])
      throw Error("antisymmetric generator " + std::string(fi.name) + " with repeated index is zero");
    return f == Family::M ? lorentz(indices[0], indices[1])
                          : galilei_rotation(indices[0], indices[1]);
  }
  return {+1, Gen(f, indices[0], indices[1])};
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '*';
    s += w[k].name();
  }
  return s;
}

}  // namespace twistkit
