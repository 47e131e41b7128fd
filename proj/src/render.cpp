#include "twistkit/render.hpp"

namespace twistkit {

std::string render_params(const ParamMono& m) {
  std::string s;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    const int e = m[p];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += param_name(p);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string render_gauss(const GaussRat& g) {
  const bool has_re = sgn(g.re) != 0;
  const bool has_im = sgn(g.im) != 0;
  if (!has_im) return to_string(g.re);
  std::string im;
  if (g.im == 1)
    im = "I";
  else if (g.im == -1)
    im = "-I";
  else
    im = to_string(g.im) + "*I";
  if (!has_re) return im;
  return "(" + to_string(g.re) + (sgn(g.im) > 0 ? "+" : "") + im + ")";
}

namespace {

std::string render_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!s.empty()) s += '*';
    s += w[k].name();
    if (run > 1) s += '^' + std::to_string(run);
    k += run;
  }
  return s;
}

// Renders one term; `negative` reports a leading minus that the caller turns
// into a binary operator.
std::string render_term(const GaussRat& v, const ParamMono& params, const std::string& body,
                        bool& negative) {
  negative = false;
  GaussRat c = v;
  const bool real = sgn(c.im) == 0;
  const bool imag = sgn(c.re) == 0;
  if ((real && sgn(c.re) < 0) || (imag && sgn(c.im) < 0)) {
    negative = true;
    c = -c;
  }
  std::string s;
  if (!(c == GaussRat(1))) s = render_gauss(c);
  const std::string ps = render_params(params);
  if (!ps.empty()) s += (s.empty() ? "" : "*") + ps;
  if (!body.empty()) s += (s.empty() ? "" : "*") + body;
  if (s.empty()) s = "1";
  return s;
}

template <std::size_t R>
std::string render_impl(const Tensor<R>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, v] : t.terms()) {
    std::string body;
    bool all_empty = true;
    for (const auto& w : k.legs) all_empty = all_empty && w.empty();
    if (R == 1 || !all_empty) {
      for (std::size_t leg = 0; leg < R; ++leg) {
        if (leg) body += " ox ";
        body += k.legs[leg].empty() ? (R == 1 ? "" : "1") : render_word(k.legs[leg]);
      }
    } else {
      for (std::size_t leg = 0; leg < R; ++leg) body += leg ? " ox 1" : "1";
    }
    // A scalar prefix attaches to the first leg; "1 ox P" needs no prefix.
    bool negative = false;
    std::string term;
    if (R > 1 && k.legs[0].empty()) {
      std::string rest = body.substr(1);  // drop the "1" of the first leg
      term = render_term(v, k.params, "", negative) + rest;
    } else {
      term = render_term(v, k.params, body, negative);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

template <std::size_t R>
nlohmann::json structured_impl(const Tensor<R>& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, v] : t.terms()) {
    nlohmann::json params = nlohmann::json::object();
    for (std::size_t i = 0; i < kParamCount; ++i) {
      const auto p = static_cast<Param>(i);
      if (k.params[p] != 0) params[std::string(param_name(p))] = k.params[p];
    }
    nlohmann::json term;
    term["coefficient"] = {{"re", to_string(v.re)}, {"im", to_string(v.im)}, {"params", params}};
    auto word_json = [](const Word& w) {
      nlohmann::json a = nlohmann::json::array();
      for (Gen g : w) a.push_back(g.name());
      return a;
    };
    if (R == 1) {
      term["word"] = word_json(k.legs[0]);
    } else {
      nlohmann::json legs = nlohmann::json::array();
      for (const auto& w : k.legs) legs.push_back(word_json(w));
      term["legs"] = legs;
    }
    terms.push_back(term);
  }
  return {{"schema", "twistkit.tensor"}, {"version", kSchemaVersion}, {"rank", R}, {"terms", terms}};
}

}  // namespace

std::string render_text(const Element& e) { return render_impl(e); }
std::string render_text(const Tensor2& t) { return render_impl(t); }
std::string render_text(const Tensor3& t) { return render_impl(t); }
nlohmann::json render_structured(const Element& e) { return structured_impl(e); }
nlohmann::json render_structured(const Tensor2& t) { return structured_impl(t); }
nlohmann::json render_structured(const Tensor3& t) { return structured_impl(t); }

}  // namespace twistkit
