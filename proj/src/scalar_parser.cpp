#include "nil2/scalar_parser.hpp"

#include <cctype>

#include "nil2/error.hpp"

namespace nil2 {

namespace {

constexpr long kMaxPower = 4096;

class Reader {
 public:
  Reader(std::string_view text, std::size_t pos, RingKind ring) : text_(text), pos_(pos), ring_(ring) {}

  std::size_t pos() const { return pos_; }

  RatFun sum() {
    skip();
    bool negate = false;
    if (eat_minus()) negate = true;
    else eat('+');
    RatFun acc = prod();
    if (negate) acc = -acc;
    while (true) {
      skip();
      if (eat('+')) acc = acc + prod();
      else if (eat_minus()) acc = acc - prod();
      else return acc;
    }
  }

  RatFun exponent_atom() {
    skip();
    if (eat('(')) return closed(')');
    if (eat('{')) return closed('}');
    bool negate = eat_minus();
    skip();
    RatFun v;
    if (peek() == 't') {
      ++pos_;
      v = RatFun(Poly::t());
    } else {
      Integer n = integer();
      Integer d = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        d = integer();
        if (d == 0) fail(ErrorKind::DivisionByZero, at, "zero denominator");
      }
      Rational q(n, d);
      q.canonicalize();
      v = RatFun(Poly(q));
    }
    return negate ? -v : v;
  }

  [[noreturn]] void fail(ErrorKind kind, std::size_t at, const std::string& msg) const {
    throw ParseError(kind, at + 1, msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool eat_minus() {
    skip();
    if (eat('-')) return true;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  RatFun closed(char close) {
    RatFun v = sum();
    skip();
    if (!eat(close)) fail(ErrorKind::SyntaxError, pos_, std::string("expected '") + close + "'");
    return v;
  }

  RatFun prod() {
    RatFun acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
      } else if (peek() == '/') {
        std::size_t at = pos_++;
        RatFun d = power();
        if (d.is_zero()) fail(ErrorKind::DivisionByZero, at, "division by zero");
        if (!d.is_constant() && ring_ != RingKind::QtField)
          fail(ErrorKind::ScalarNotInRing, at, "division by a non-constant requires Q(t)");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFun power() {
    RatFun base = atom();
    skip();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    bool negative = eat_minus();
    skip();
    Integer e = integer();
    if (e > kMaxPower) fail(ErrorKind::SyntaxError, at, "exponent too large");
    if (negative) {
      if (base.is_zero()) fail(ErrorKind::DivisionByZero, at, "negative power of zero");
      if (!base.is_constant() && ring_ != RingKind::QtField)
        fail(ErrorKind::ScalarNotInRing, at, "negative power of a non-constant requires Q(t)");
      base = base.inverse();
    }
    RatFun r(Poly(1));
    for (long i = e.get_si(); i > 0; --i) r = r * base;
    return r;
  }

  RatFun atom() {
    skip();
    if (eat('(')) return closed(')');
    if (peek() == 't') {
      ++pos_;
      return RatFun(Poly::t());
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return RatFun(Poly(Rational(integer())));
    if (pos_ >= text_.size()) fail(ErrorKind::SyntaxError, pos_, "unexpected end of scalar");
    fail(ErrorKind::SyntaxError, pos_, std::string("unexpected '") + peek() + "' in scalar");
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(ErrorKind::SyntaxError, pos_, "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_;
  RingKind ring_;
};

Scalar to_ring(const RatFun& v, RingKind ring, std::size_t start) {
  try {
    return Scalar::from_ratfun(ring, v);
  } catch (const Error& e) {
    throw ParseError(ErrorKind::ScalarNotInRing, start + 1, e.what());
  }
}

}  // namespace

Scalar read_scalar(std::string_view text, std::size_t& pos, RingKind ring, ScalarForm form) {
  Reader r(text, pos, ring);
  r.skip();
  const std::size_t start = r.pos();
  RatFun v = form == ScalarForm::Sum ? r.sum() : r.exponent_atom();
  pos = r.pos();
  return to_ring(v, ring, start);
}

Scalar parse_scalar(std::string_view text, RingKind ring) {
  std::size_t pos = 0;
  Scalar s = read_scalar(text, pos, ring, ScalarForm::Sum);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError(ErrorKind::SyntaxError, pos + 1, "trailing input in scalar");
  return s;
}

}  // namespace nil2
