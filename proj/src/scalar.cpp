#include "nil2/scalar.hpp"

#include "nil2/error.hpp"

namespace nil2 {

RingDescriptor describe(RingKind kind) {
  switch (kind) {
    case RingKind::Z: return {kind, true, false, AdditiveBasisKind::None};
    case RingKind::Q: return {kind, true, true, AdditiveBasisKind::None};
    case RingKind::QtPoly: return {kind, true, false, AdditiveBasisKind::Monomials};
    case RingKind::QtField: return {kind, true, true, AdditiveBasisKind::PartialFractions};
  }
  return {kind, false, false, AdditiveBasisKind::None};
}

std::string_view ring_name(RingKind kind) {
  switch (kind) {
    case RingKind::Z: return "Z";
    case RingKind::Q: return "Q";
    case RingKind::QtPoly: return "Q[t]";
    case RingKind::QtField: return "Q(t)";
  }
  return "?";
}

std::optional<RingKind> parse_ring_name(std::string_view name) {
  if (name == "Z") return RingKind::Z;
  if (name == "Q") return RingKind::Q;
  if (name == "Q[t]" || name == "Qt") return RingKind::QtPoly;
  if (name == "Q(t)") return RingKind::QtField;
  return std::nullopt;
}

Scalar::Scalar(RingKind kind, long value) {
  switch (kind) {
    case RingKind::Z: v_ = Integer(value); break;
    case RingKind::Q: v_ = Rational(value); break;
    case RingKind::QtPoly: v_ = Poly(value); break;
    case RingKind::QtField: v_ = RatFun(Poly(value)); break;
  }
}

Scalar Scalar::t(RingKind kind) {
  switch (kind) {
    case RingKind::QtPoly: return Scalar(Value(Poly::t()));
    case RingKind::QtField: return Scalar(Value(RatFun(Poly::t())));
    default: throw Error(ErrorKind::ScalarNotInRing, "t is not an element of " + std::string(ring_name(kind)));
  }
}

Scalar Scalar::from_rational(RingKind kind, const Rational& q) {
  switch (kind) {
    case RingKind::Z:
      if (q.get_den() != 1) throw Error(ErrorKind::ScalarNotInRing, nil2::to_string(q) + " is not an integer");
      return Scalar(Value(Integer(q.get_num())));
    case RingKind::Q: return Scalar(Value(q));
    case RingKind::QtPoly: return Scalar(Value(Poly(q)));
    case RingKind::QtField: return Scalar(Value(RatFun(Poly(q))));
  }
  return {};
}

Scalar Scalar::from_poly(RingKind kind, const Poly& p) {
  switch (kind) {
    case RingKind::Z:
    case RingKind::Q:
      if (!p.is_constant())
        throw Error(ErrorKind::ScalarNotInRing, p.to_string() + " is not a constant");
      return from_rational(kind, p.coeff(0));
    case RingKind::QtPoly: return Scalar(Value(p));
    case RingKind::QtField: return Scalar(Value(RatFun(p)));
  }
  return {};
}

Scalar Scalar::from_ratfun(RingKind kind, const RatFun& f) {
  if (kind == RingKind::QtField) return Scalar(Value(f));
  if (!f.is_polynomial())
    throw Error(ErrorKind::ScalarNotInRing, f.to_string() + " is not in " + std::string(ring_name(kind)));
  return from_poly(kind, f.num());
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) return x == 0;
        else return x.is_zero();
      },
      v_);
}

bool Scalar::is_one() const { return *this == one(kind()); }

namespace {

void check_same(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind())
    throw Error(ErrorKind::MixedRings, "mixed rings " + std::string(ring_name(a.kind())) + " and " +
                                           std::string(ring_name(b.kind())));
}

}  // namespace

Scalar Scalar::operator-() const {
  return Scalar(std::visit(
      [](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        return T(-x);
      },
      v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(*this, o);
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RatFun>) x = x + std::get<T>(o.v_);
        else x += std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(*this, o);
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RatFun>) x = x - std::get<T>(o.v_);
        else x -= std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(*this, o);
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RatFun>) x = x * std::get<T>(o.v_);
        else x *= std::get<T>(o.v_);
      },
      v_);
  return *this;
}

Scalar divide(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  switch (a.kind()) {
    case RingKind::Z: {
      const auto& x = std::get<Integer>(a.v_);
      const auto& y = std::get<Integer>(b.v_);
      if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()))
        throw Error(ErrorKind::NotInvertible, x.get_str() + " is not divisible by " + y.get_str());
      return Scalar(Scalar::Value(Integer(x / y)));
    }
    case RingKind::Q: return Scalar(Scalar::Value(Rational(std::get<Rational>(a.v_) / std::get<Rational>(b.v_))));
    case RingKind::QtPoly: return Scalar(Scalar::Value(exact_div(std::get<Poly>(a.v_), std::get<Poly>(b.v_))));
    case RingKind::QtField: return Scalar(Scalar::Value(std::get<RatFun>(a.v_) / std::get<RatFun>(b.v_)));
  }
  return {};
}

bool Scalar::is_invertible() const {
  if (is_zero()) return false;
  switch (kind()) {
    case RingKind::Z: return abs(std::get<Integer>(v_)) == 1;
    case RingKind::QtPoly: return std::get<Poly>(v_).is_constant();
    default: return true;
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!is_invertible())
    throw Error(ErrorKind::NotInvertible, to_string() + " is not invertible in " + std::string(ring_name(kind())));
  return divide(one(kind()), *this);
}

RatFun Scalar::to_ratfun() const {
  return std::visit(
      [](const auto& x) -> RatFun {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) return RatFun(Poly(Rational(x)));
        else if constexpr (std::is_same_v<T, Rational>) return RatFun(Poly(x));
        else if constexpr (std::is_same_v<T, Poly>) return RatFun(x);
        else return x;
      },
      v_);
}

Scalar Scalar::scaled(const Rational& q) const { return *this * from_rational(kind(), q); }

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) return x.get_str();
        else if constexpr (std::is_same_v<T, Rational>) return nil2::to_string(x);
        else return x.to_string();
      },
      v_);
}

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value());
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
          int s = cmp(x, y);
          return s < 0 ? std::strong_ordering::less
                       : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
        } else {
          return compare(x, y);
        }
      },
      a.value());
}

std::optional<Rational> as_rational(const Scalar& a) {
  return std::visit(
      [](const auto& x) -> std::optional<Rational> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) return Rational(x);
        else if constexpr (std::is_same_v<T, Rational>) return x;
        else if constexpr (std::is_same_v<T, Poly>) {
          if (x.is_constant()) return x.coeff(0);
          return std::nullopt;
        } else {
          if (x.is_constant()) return x.num().coeff(0);
          return std::nullopt;
        }
      },
      a.value());
}

Scalar binomial(const Scalar& a, unsigned k) {
  const RingKind kind = a.kind();
  if (kind == RingKind::Z) {
    // Generalized binomial over Z; the quotient is always exact.
    Scalar num = Scalar::one(kind);
    Integer fact = 1;
    for (unsigned i = 0; i < k; ++i) {
      num *= a - Scalar(kind, static_cast<long>(i));
      fact *= i + 1;
    }
    return divide(num, Scalar::from_rational(kind, Rational(fact)));
  }
  Scalar acc = Scalar::one(kind);
  Integer fact = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= a - Scalar(kind, static_cast<long>(i));
    fact *= i + 1;
  }
  return acc.scaled(Rational(Integer(1), fact));
}

}  // namespace nil2
