#include "twistkit/parser.hpp"

#include <cctype>

#include "twistkit/render.hpp"
#include "twistkit/series.hpp"

namespace twistkit {

namespace {

enum class Tok { num, ident, lparen, rparen, lbrack, rbrack, comma, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::num, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (ch) {
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '[': k = Tok::lbrack; break;
      case ']': k = Tok::rbrack; break;
      case ',': k = Tok::comma; break;
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

int rank_of_value(const ParsedValue& v) { return static_cast<int>(v.index()) + 1; }

template <std::size_t R>
bool is_scalar(const Tensor<R>& t) {
  for (const auto& [k, v] : t.terms())
    for (const auto& w : k.legs)
      if (!w.empty()) return false;
  return true;
}

bool scalar_value(const ParsedValue& v) {
  return std::visit([](const auto& t) { return is_scalar(t); }, v);
}

template <std::size_t R>
Tensor<R> promote(const Element& s) {
  Tensor<R> out;
  for (const auto& [k, v] : s.terms()) out.add_term(typename Tensor<R>::Legs{}, Scalar(v, k.params));
  return out;
}

ParsedValue promote_to(const Element& s, int rank) {
  switch (rank) {
    case 2: return promote<2>(s);
    case 3: return promote<3>(s);
    default: return s;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const Presentation& p) : toks_(lex(text)), p_(p) {}

  ParsedValue run() {
    ParsedValue v = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++k_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, peek().pos); }
  [[noreturn]] static void fail_at(const std::string& what, std::size_t pos) { throw ParseError(what, pos); }
  void expect(Tok t, const char* what) {
    if (!accept(t)) fail(std::string("expected ") + what);
  }

  ParsedValue expr() {
    bool neg = false;
    if (accept(Tok::minus))
      neg = true;
    else
      accept(Tok::plus);
    ParsedValue acc = tensor();
    if (neg) acc = negate(acc);
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept(Tok::plus))
        acc = add(acc, tensor(), false, pos);
      else if (accept(Tok::minus))
        acc = add(acc, tensor(), true, pos);
      else
        return acc;
    }
  }

  ParsedValue tensor() {
    ParsedValue acc = product();
    while (peek().kind == Tok::ident && peek().text == "ox") {
      const std::size_t pos = next().pos;
      acc = ox(acc, product(), pos);
    }
    return acc;
  }

  ParsedValue product() {
    ParsedValue acc = unary();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept(Tok::star))
        acc = mul(acc, unary(), pos);
      else if (accept(Tok::slash))
        acc = mul(acc, invert(unary(), pos), pos);
      else
        return acc;
    }
  }

  ParsedValue unary() {
    if (accept(Tok::minus)) return negate(unary());
    return power();
  }

  ParsedValue power() {
    const std::size_t pos = peek().pos;
    ParsedValue base = atom();
    if (!accept(Tok::caret)) return base;
    const bool neg = accept(Tok::minus);
    if (peek().kind != Tok::num) fail("expected integer exponent");
    const std::string digits = next().text;
    if (digits.size() > 4) fail_at("exponent too large", pos);
    const int n = std::stoi(digits);
    if (neg) base = invert(base, pos);
    ParsedValue out = promote_to(Element::unit(), rank_of_value(base));
    for (int i = 0; i < n; ++i) out = mul(out, base, pos);
    return out;
  }

  ParsedValue atom() {
    const Token& t = peek();
    if (accept(Tok::num)) {
      return Element::scalar(Scalar(GaussRat(Rational(t.text))));
    }
    if (accept(Tok::lparen)) {
      ParsedValue v = expr();
      expect(Tok::rparen, "')'");
      return v;
    }
    if (t.kind != Tok::ident) fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    next();
    if (t.text == "I") return Element::scalar(Scalar(GaussRat::i_unit()));
    if (t.text == "exp") {
      expect(Tok::lparen, "'(' after exp");
      ParsedValue arg = expr();
      expect(Tok::rparen, "')'");
      return exponential(arg, t.pos);
    }
    if (t.text == "cinv") return scalar_param(Param::c, -1);
    if (auto prm = param_from_name(t.text)) return scalar_param(*prm, 1);
    return generator(t);
  }

  Element scalar_param(Param prm, int e) const {
    return Element::scalar(Scalar::param(prm, e)).truncated(p_.policy());
  }

  ParsedValue generator(const Token& t) {
    const auto fam = family_from_name(t.text);
    if (!fam) fail_at("unknown generator or parameter '" + t.text + "'", t.pos);
    std::vector<int> idx;
    if (accept(Tok::lbrack)) {
      do {
        if (peek().kind != Tok::num) fail("expected index");
        const std::string d = next().text;
        idx.push_back(d.size() > 2 ? 99 : std::stoi(d));
      } while (accept(Tok::comma));
      expect(Tok::rbrack, "']'");
    }
    SignedGen g;
    try {
      g = gen_from_parts(*fam, idx);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(e.what(), t.pos);
    }
    if (!p_.contains(g.gen)) fail_at("unknown generator " + g.gen.name() + " in " + p_.name(), t.pos);
    return gen_element(g);
  }

  // --- arithmetic -------------------------------------------------------------

  static ParsedValue negate(const ParsedValue& v) {
    return std::visit([](const auto& t) -> ParsedValue { return -t; }, v);
  }

  static ParsedValue add(const ParsedValue& a, const ParsedValue& b, bool minus, std::size_t pos) {
    if (a.index() != b.index())
      fail_at("cannot add tensors of rank " + std::to_string(rank_of_value(a)) + " and " +
                  std::to_string(rank_of_value(b)),
              pos);
    return std::visit(
        [&](const auto& x) -> ParsedValue {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          return minus ? x - y : x + y;
        },
        a);
  }

  ParsedValue mul(ParsedValue a, ParsedValue b, std::size_t pos) const {
    if (a.index() != b.index()) {
      if (a.index() == 0 && scalar_value(a))
        a = promote_to(std::get<Element>(a), rank_of_value(b));
      else if (b.index() == 0 && scalar_value(b))
        b = promote_to(std::get<Element>(b), rank_of_value(a));
      else
        fail_at("cannot multiply tensors of rank " + std::to_string(rank_of_value(a)) + " and " +
                    std::to_string(rank_of_value(b)),
                pos);
    }
    return std::visit(
        [&](const auto& x) -> ParsedValue {
          using T = std::decay_t<decltype(x)>;
          return p_.multiply(x, std::get<T>(b));
        },
        a);
  }

  static ParsedValue ox(const ParsedValue& a, const ParsedValue& b, std::size_t pos) {
    const int ra = rank_of_value(a), rb = rank_of_value(b);
    if (ra + rb > 3) fail_at("tensor rank above 3", pos);
    if (ra == 1 && rb == 1) return twistkit::tensor(std::get<Element>(a), std::get<Element>(b));
    if (ra == 2) return twistkit::tensor(std::get<Tensor2>(a), std::get<Element>(b));
    return twistkit::tensor(std::get<Element>(a), std::get<Tensor2>(b));
  }

  // Only single-term scalars (number times parameter monomial) are invertible.
  static ParsedValue invert(const ParsedValue& v, std::size_t pos) {
    const Element* e = std::get_if<Element>(&v);
    if (!e || !is_scalar(*e) || e->size() != 1) fail_at("only a single scalar term can be inverted", pos);
    const auto& [k, c] = *e->terms().begin();
    return Element::scalar(Scalar(GaussRat(1) / c, k.params.inverse()));
  }

  ParsedValue exponential(const ParsedValue& arg, std::size_t pos) const {
    return std::visit(
        [&](const auto& x) -> ParsedValue {
          for (const auto& [k, v] : x.terms()) {
            bool constant = true;
            for (const auto& w : k.legs) constant = constant && w.empty();
            if (constant && k.params.is_one()) fail_at("exp argument has a constant term", pos);
          }
          try {
            return exp_tensor(p_, x);
          } catch (const SeriesDiverges&) {
            fail_at("exp argument is not nilpotent under " + p_.policy().describe(), pos);
          }
        },
        arg);
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  const Presentation& p_;
};

template <typename T>
T expect_rank(std::string_view text, const Presentation& p, int rank) {
  ParsedValue v = parse_expression(text, p);
  if (auto* t = std::get_if<T>(&v)) return *t;
  if (v.index() == 0 && scalar_value(v)) return std::get<T>(promote_to(std::get<Element>(v), rank));
  throw ParseError("expected a rank " + std::to_string(rank) + " expression, got rank " +
                       std::to_string(rank_of_value(v)),
                   0);
}

}  // namespace

ParsedValue parse_expression(std::string_view text, const Presentation& p) {
  ParsedValue v = Parser(text, p).run();
  return std::visit([&](const auto& t) -> ParsedValue { return p.normal_order(t); }, v);
}

Element parse_element(std::string_view text, const Presentation& p) { return expect_rank<Element>(text, p, 1); }
Tensor2 parse_tensor2(std::string_view text, const Presentation& p) { return expect_rank<Tensor2>(text, p, 2); }
Tensor3 parse_tensor3(std::string_view text, const Presentation& p) { return expect_rank<Tensor3>(text, p, 3); }

std::string render_text(const ParsedValue& v) {
  return std::visit([](const auto& t) { return render_text(t); }, v);
}

int rank_of(const ParsedValue& v) { return rank_of_value(v); }

}  // namespace twistkit
