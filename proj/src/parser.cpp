#include "imult/parser.hpp"

#include <cctype>

namespace imult {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() { return peek() == '\0'; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "position " + std::to_string(pos_) + ": " + what);
  }

  Integer natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational rational() {
    Integer num = natural();
    if (accept('/')) {
      Integer den = natural();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  std::int64_t exponent() {
    if (peek() == '-') fail("negative exponent");
    Integer n = natural();
    if (n > Integer("4611686018427387903")) fail("exponent too large");
    return to_int64(n);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, bool univariate) : lex_(text), univariate_(univariate) {}

  BiPoly parse() {
    BiPoly p = expr();
    if (!lex_.at_end()) lex_.fail("unexpected character '" + std::string(1, lex_.peek()) + "'");
    return p;
  }

  bool saw_y() const { return saw_y_; }

 private:
  BiPoly expr() {
    bool negate = lex_.accept('-');
    BiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (lex_.accept('+')) acc += term();
      else if (lex_.accept('-')) acc -= term();
      else return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (lex_.accept('*')) acc *= factor();
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (lex_.accept('^')) {
      std::int64_t n = lex_.exponent();
      if (b.term_count() == 1) {
        const auto& [e, c] = *b.terms().begin();
        return BiPoly::monomial(c.pow(static_cast<std::uint64_t>(n)), checked_mul(e.x, n), checked_mul(e.y, n));
      }
      return b.pow(static_cast<std::uint64_t>(n));
    }
    return b;
  }

  BiPoly base() {
    char c = lex_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(AlgNum(lex_.rational()));
    if (lex_.accept('(')) {
      BiPoly p = expr();
      lex_.expect(')');
      return p;
    }
    if (lex_.accept('x')) return BiPoly::x();
    if (c == 'y' && !univariate_) {
      lex_.accept('y');
      saw_y_ = true;
      return BiPoly::y();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) lex_.fail(std::string("unknown variable '") + c + "'");
    if (c == '\0') lex_.fail("unexpected end of input");
    lex_.fail(std::string("unexpected character '") + c + "'");
  }

  Lexer lex_;
  bool univariate_;
  bool saw_y_ = false;
};

}  // namespace

PolySpec parse_poly(std::string_view text, bool univariate) {
  PolyParser p(text, univariate);
  PolySpec spec;
  spec.source = std::string(text);
  spec.poly = p.parse();
  spec.univariate = !p.saw_y();
  return spec;
}

UniPoly parse_unipoly(std::string_view text) {
  BiPoly p = parse_poly(text, true).poly;
  UniPoly::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(e.x, c);
  return UniPoly(std::move(t));
}

PuiseuxSeries parse_series(std::string_view text) {
  Lexer lex(text);
  PuiseuxSeries acc;
  std::optional<Rational> order;
  bool first = true;
  while (!lex.at_end()) {
    bool negative = false;
    if (lex.accept('-')) negative = true;
    else if (!first && !lex.accept('+')) lex.fail("expected '+' or '-'");
    first = false;
    auto read_power = [&]() -> Rational {
      if (!lex.accept('^')) return Rational(1);
      if (lex.accept('(')) {
        bool neg = lex.accept('-');
        Rational q = lex.rational();
        lex.expect(')');
        return neg ? Rational(-q) : q;
      }
      return Rational(lex.natural());
    };
    if (lex.accept('O')) {
      lex.expect('(');
      Rational q(0);
      if (lex.accept('x')) q = read_power();
      else if (lex.natural() != 1) lex.fail("expected x or 1 inside O()");
      lex.expect(')');
      order = q;
      break;
    }
    Rational coef(1);
    Rational expo(0);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coef = lex.rational();
      any = true;
      if (lex.accept('*')) {
        if (!lex.accept('x')) lex.fail("expected x");
        expo = read_power();
      }
    } else if (lex.accept('x')) {
      any = true;
      expo = read_power();
    }
    if (!any) lex.fail("expected a term");
    acc += PuiseuxSeries::monomial(AlgNum(negative ? Rational(-coef) : coef), expo);
  }
  if (!lex.at_end()) lex.fail("trailing input after order term");
  if (order) acc = acc.truncated(*order);
  return acc;
}

std::pair<Rational, Rational> parse_point(std::string_view text) {
  Lexer lex(text);
  auto coord = [&lex]() {
    bool neg = lex.accept('-');
    Rational q = lex.rational();
    return neg ? Rational(-q) : q;
  };
  Rational a = coord();
  lex.expect(',');
  Rational b = coord();
  if (!lex.at_end()) lex.fail("trailing input in point");
  return {a, b};
}

}  // namespace imult
