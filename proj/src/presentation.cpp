#include "twistkit/presentation.hpp"

namespace twistkit {

Presentation::Presentation(std::string name, std::vector<Gen> generators, TruncationPolicy policy)
    : name_(std::move(name)), generators_(std::move(generators)), policy_(policy) {
  gen_set_.insert(generators_.begin(), generators_.end());
}

void Presentation::set_commutator(Gen g, Gen h, const Element& value) {
  if (g == h) throw Error("commutator of a generator with itself is zero");
  if (!contains(g) || !contains(h))
    throw UnknownGenerator("table entry for unknown generator in " + name_);
  const Element v = value.truncated(policy_);
  if (g > h)
    table_[{g, h}] = v;
  else
    table_[{h, g}] = -v;
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

Element Presentation::table_commutator(Gen g, Gen h) const {
  if (g == h) return {};
  if (g > h) {
    auto it = table_.find({g, h});
    return it == table_.end() ? Element{} : it->second;
  }
  auto it = table_.find({h, g});
  return it == table_.end() ? Element{} : -it->second;
}

std::size_t Presentation::CacheKeyHash::operator()(const std::pair<Gen, Word>& k) const noexcept {
  std::size_t h = k.first.code() * 0x9E3779B97F4A7C15ull;
  for (Gen g : k.second) h = (h ^ g.code()) * 1099511628211ull;
  return h;
}

const Element& Presentation::gen_times_word(Gen g, const Word& w) const {
  const auto key = std::make_pair(g, w);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Element result;
  if (w.empty() || !(w.front() < g)) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(g);
    out.insert(out.end(), w.begin(), w.end());
    result = Element::word({out});
  } else {
    // g h rest = h (g rest) + [g,h] rest
    const Gen h = w.front();
    const Word rest(w.begin() + 1, w.end());
    const Element& inner = gen_times_word(g, rest);
    for (const auto& [k, v] : inner.terms()) {
      const Element& moved = gen_times_word(h, k.legs[0]);
      result += moved.scaled(Scalar(v, k.params));
    }
    const Element comm = table_commutator(g, h);
    for (const auto& [k, v] : comm.terms())
      result += multiply_words(k.legs[0], rest).scaled(Scalar(v, k.params));
    result = result.truncated(policy_);
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(key, std::move(result)).first->second;
}

Element Presentation::multiply_words(const Word& u, const Word& v) const {
  Element acc = Element::word({v});
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    Element next;
    for (const auto& [k, c] : acc.terms())
      next += gen_times_word(*it, k.legs[0]).scaled(Scalar(c, k.params));
    acc = next.truncated(policy_);
  }
  return acc;
}

Element Presentation::normal_word(const Word& w) const {
  for (Gen g : w)
    if (!contains(g))
      throw UnknownGenerator("generator " + g.name() + " is not part of presentation " + name_);
  return multiply_words(w, {});
}

}  // namespace twistkit
