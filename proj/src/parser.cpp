#include "acbm/exact.hpp"

#include <cctype>

namespace acbm {

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := ('-')? atom ('^' NAT)?        -- "-a^2" reads as -(a^2)
// atom   := RATIONAL | NAT | IDENT | '(' expr ')'
class ExprParser {
public:
  ExprParser(std::string_view text, const ParamSpacePtr &params, int line,
             int column_offset)
      : text_(text), params_(params), line_(line), column_offset_(column_offset) {}

  Scalar parse() {
    Scalar s = expr();
    skip_ws();
    if (pos_ < text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, line_, column_offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Scalar term() {
    Scalar acc = factor();
    while (accept('*'))
      acc *= factor();
    return acc;
  }

  Scalar factor() {
    const bool negate = accept('-');
    Scalar base = atom();
    if (accept('^')) {
      skip_ws();
      if (!at_digit())
        fail("exponent must be a nonnegative integer literal");
      mpz_class e = nat();
      if (!e.fits_uint_p() || e > 1000)
        fail("exponent too large");
      Scalar r(params_, 1);
      for (unsigned long i = 0; i < e.get_ui(); ++i)
        r *= base;
      base = r;
    }
    return negate ? -base : base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = nat();
      if (accept('/')) {
        if (!at_digit())
          fail("expected denominator");
        const std::size_t den_pos = pos_;
        mpz_class den = nat();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return Scalar(params_, q);
      }
      return Scalar(params_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      auto idx = params_ ? params_->index_of(ident) : std::nullopt;
      if (!idx) {
        pos_ = start;
        fail("unknown identifier '" + std::string(ident) + "'");
      }
      return Scalar::variable(params_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParamSpacePtr &params_;
  int line_;
  int column_offset_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_expr(std::string_view text, const ParamSpacePtr &params, int line,
                  int column_offset) {
  return ExprParser(text, params, line, column_offset).parse();
}

Rational parse_rational(std::string_view text) {
  Scalar s = parse_expr(text, nullptr);
  return s.constant_value();
}

} // namespace acbm
