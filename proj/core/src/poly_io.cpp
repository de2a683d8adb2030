#include <cctype>
#include <sstream>

#include "nfl/polynomial.hpp"

namespace nfl {

namespace {

void print_term(std::ostream& os, const Term& t, const VarContext& ctx,
                bool first) {
  Int c = t.c;
  if (c < 0) {
    os << '-';
    c = -c;
  } else if (!first) {
    os << '+';
  }
  bool coeff_printed = false;
  if (c != 1 || t.m.is_one()) {
    os << c.get_str();
    coeff_printed = true;
  }
  for (const auto& f : t.m.factors()) {
    if (coeff_printed) os << '*';
    coeff_printed = true;
    os << ctx.name(f.first);
    if (f.second > 1) os << '^' << f.second;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    print_term(os, t, *ctx_, first);
    first = false;
  }
  return os.str();
}

std::string Polynomial::canonical_key() const {
  if (ord_ == MonomialOrder::degrevlex()) return to_string();
  return resorted(MonomialOrder::degrevlex()).to_string();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  ContextPtr ctx;
  MonomialOrder ord;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw usage_error("polynomial parse error at position " +
                      std::to_string(pos) + ": " + what + " in \"" + s + "\"");
  }

  Polynomial parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = parse_product();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc = acc + parse_product();
      else if (eat('-'))
        acc = acc - parse_product();
      else
        break;
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_power();
        continue;
      }
      // implicit product when a variable or '(' follows directly
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        acc = acc * parse_power();
        continue;
      }
      break;
    }
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (start == pos) fail("expected exponent");
      unsigned long e = std::stoul(s.substr(start, pos - start));
      return base.pow(static_cast<uint32_t>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (eat('(')) {
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      return Polynomial::constant(ctx, Int(s.substr(start, pos - start)), ord);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      std::size_t idx = ctx->index_of(name);
      if (idx == VarContext::npos) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ctx, idx, ord);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, ContextPtr ctx,
                            MonomialOrder ord) {
  Parser p{text, 0, std::move(ctx), ord};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace nfl
