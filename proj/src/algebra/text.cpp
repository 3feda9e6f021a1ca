#include "smlab/algebra/text.hpp"

#include <cctype>
#include <string>

#include "smlab/algebra/rational_expr.hpp"

namespace smlab::algebra {

std::string to_string(const Monomial& m) {
  std::string out;
  for (Var v : kAllVars) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : p.terms()) {
    const bool negative = coef < 0;
    const Rational mag = abs(coef);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += to_string(mono);
    } else {
      out += mag.get_str() + "*" + to_string(mono);
    }
  }
  return out;
}

std::string to_string(const RationalExpr& e) {
  const std::string num = to_string(e.num());
  if (e.is_polynomial()) return num;
  std::string out = e.num().size() > 1 ? "(" + num + ")" : num;
  const auto& den = e.den();
  const bool bare = den.size() == 1 && den.leading_coefficient() == 1 && den.variables().size() == 1;
  out += bare ? "/" + to_string(den) : "/(" + to_string(den) + ")";
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalExpr parse() {
    RationalExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                       std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalExpr expression() {
    RationalExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        acc /= unary();
      } else {
        return acc;
      }
    }
  }

  RationalExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  RationalExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalExpr inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalExpr(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto ident = text_.substr(start, pos_ - start);
      if (auto v = parse_var(ident)) return RationalExpr(*v);
      pos_ = start;
      fail("unknown indeterminate '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalExpr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace smlab::algebra
