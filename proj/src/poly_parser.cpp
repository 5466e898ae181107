#include "twistgen/poly_parser.hpp"

namespace twistgen {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  std::unique_ptr<PolyExpr> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<PolyExpr> node(PolyExpr::Kind k) {
    auto n = std::make_unique<PolyExpr>();
    n->kind = k;
    return n;
  }

  std::unique_ptr<PolyExpr> expr() {
    std::unique_ptr<PolyExpr> acc;
    if (eat('-')) {
      acc = node(PolyExpr::Kind::Neg);
      acc->lhs = term();
    } else {
      acc = term();
    }
    for (;;) {
      if (eat('+')) {
        auto n = node(PolyExpr::Kind::Add);
        n->lhs = std::move(acc);
        n->rhs = term();
        acc = std::move(n);
      } else if (eat('-')) {
        auto n = node(PolyExpr::Kind::Sub);
        n->lhs = std::move(acc);
        n->rhs = term();
        acc = std::move(n);
      } else {
        return acc;
      }
    }
  }

  std::unique_ptr<PolyExpr> term() {
    auto acc = factor();
    while (eat('*')) {
      auto n = node(PolyExpr::Kind::Mul);
      n->lhs = std::move(acc);
      n->rhs = factor();
      acc = std::move(n);
    }
    return acc;
  }

  std::unique_ptr<PolyExpr> factor() {
    auto b = base();
    if (eat('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-')
        fail("negative exponent");
      auto n = node(PolyExpr::Kind::Pow);
      n->lhs = std::move(b);
      n->exponent = natural();
      return n;
    }
    return b;
  }

  std::int64_t natural() {
    skip_ws();
    if (pos_ >= text_.size() || !isdigit(text_[pos_]))
      fail("expected exponent");
    std::int64_t v = 0;
    while (pos_ < text_.size() && isdigit(text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  std::unique_ptr<PolyExpr> base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (isdigit(c) || c == '-') return rational();
    if (isalpha(c)) {
      std::string name;
      while (pos_ < text_.size() &&
             (isalnum(static_cast<unsigned char>(text_[pos_]))))
        name += text_[pos_++];
      const auto v = var_from_name(name);
      if (!v) fail("unknown variable '" + name + "'");
      auto n = node(PolyExpr::Kind::Variable);
      n->variable = *v;
      return n;
    }
    fail("expected polynomial factor");
  }

  std::unique_ptr<PolyExpr> rational() {
    skip_ws();
    std::string digits;
    if (pos_ < text_.size() && text_[pos_] == '-') digits += text_[pos_++];
    if (pos_ >= text_.size() || !isdigit(text_[pos_])) fail("expected number");
    while (pos_ < text_.size() && isdigit(text_[pos_]))
      digits += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den;
      while (pos_ < text_.size() && isdigit(text_[pos_])) den += text_[pos_++];
      if (den.empty()) fail("expected denominator");
      digits += "/" + den;
    }
    auto n = node(PolyExpr::Kind::Number);
    n->number = rat_parse(digits);
    return n;
  }
};

}  // namespace

MPoly PolyExpr::to_mpoly() const {
  switch (kind) {
    case Kind::Number:
      return MPoly::constant(number);
    case Kind::Variable:
      return MPoly::variable(variable);
    case Kind::Add:
      return lhs->to_mpoly() + rhs->to_mpoly();
    case Kind::Sub:
      return lhs->to_mpoly() - rhs->to_mpoly();
    case Kind::Mul:
      return lhs->to_mpoly() * rhs->to_mpoly();
    case Kind::Pow:
      return lhs->to_mpoly().pow(exponent);
    case Kind::Neg:
      return -lhs->to_mpoly();
  }
  throw std::logic_error("unreachable");
}

std::unique_ptr<PolyExpr> parse_poly_expr(const std::string& text) {
  return Parser(text).parse();
}

MPoly parse_poly(const std::string& text) {
  return parse_poly_expr(text)->to_mpoly();
}

}  // namespace twistgen
