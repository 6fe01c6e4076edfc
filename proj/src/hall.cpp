#include "nil2/hall.hpp"

#include "nil2/error.hpp"

namespace nil2 {

namespace {

void check_compatible(const HallElement& g, const HallElement& h) {
  if (g.ring != h.ring) throw Error(ErrorKind::MixedRings, "Hall elements over different rings");
  if (g.schema != h.schema && *g.schema != *h.schema)
    throw Error(ErrorKind::SchemaMismatch, "Hall elements over different group schemas");
}

}  // namespace

HallElement HallElement::identity(SchemaPtr schema, RingKind ring) {
  HallElement e;
  e.a.assign(static_cast<std::size_t>(schema->m()), Scalar::zero(ring));
  e.b.assign(static_cast<std::size_t>(schema->n()), Scalar::zero(ring));
  e.schema = std::move(schema);
  e.ring = ring;
  return e;
}

HallElement HallElement::generator(SchemaPtr schema, RingKind ring, int i) {
  if (i < 1 || i > schema->m()) throw Error(ErrorKind::UnknownGenerator, "no generator u" + std::to_string(i));
  HallElement e = identity(std::move(schema), ring);
  e.a[static_cast<std::size_t>(i - 1)] = Scalar::one(ring);
  return e;
}

HallElement HallElement::central(SchemaPtr schema, RingKind ring, int j) {
  if (j < 1 || j > schema->n()) throw Error(ErrorKind::UnknownGenerator, "no central generator v" + std::to_string(j));
  HallElement e = identity(std::move(schema), ring);
  e.b[static_cast<std::size_t>(j - 1)] = Scalar::one(ring);
  return e;
}

bool HallElement::is_central() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool HallElement::is_identity() const {
  if (!is_central()) return false;
  for (const auto& x : b)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const HallElement& g, const HallElement& h) {
  if (g.ring != h.ring) return false;
  if (g.schema != h.schema && *g.schema != *h.schema) return false;
  return g.a == h.a && g.b == h.b;
}

std::vector<Scalar> sigma(std::span<const Scalar> x, std::span<const Scalar> y, const GroupSchema& schema) {
  const auto m = static_cast<std::size_t>(schema.m());
  if (x.size() != m || y.size() != m)
    throw Error(ErrorKind::LengthMismatch, "sigma needs two vectors of length m = " + std::to_string(m));
  const RingKind ring = x.front().kind();
  std::vector<Scalar> out(static_cast<std::size_t>(schema.n()), Scalar::zero(ring));
  for (int i = 2; i <= schema.m(); ++i) {
    const Scalar& xi = x[static_cast<std::size_t>(i - 1)];
    if (xi.is_zero()) continue;
    for (int j = 1; j < i; ++j) {
      const Scalar& yj = y[static_cast<std::size_t>(j - 1)];
      if (yj.is_zero()) continue;
      const Scalar prod = xi * yj;
      const auto& k = schema.k(i, j);
      for (std::size_t l = 0; l < out.size(); ++l)
        if (k[l] != 0) out[l] += prod.scaled(Rational(k[l]));
    }
  }
  return out;
}

HallElement hall_mul(const HallElement& g, const HallElement& h) {
  check_compatible(g, h);
  HallElement r = g;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += h.a[i];
  const auto s = sigma(g.a, h.a, *g.schema);
  for (std::size_t l = 0; l < r.b.size(); ++l) r.b[l] += h.b[l] + s[l];
  return r;
}

HallElement hall_inv(const HallElement& g) {
  HallElement r = g;
  const auto s = sigma(g.a, g.a, *g.schema);
  for (auto& x : r.a) x = -x;
  for (std::size_t l = 0; l < r.b.size(); ++l) r.b[l] = s[l] - g.b[l];
  return r;
}

HallElement hall_exp(const HallElement& g, const Scalar& mu) {
  if (mu.kind() != g.ring) throw Error(ErrorKind::MixedRings, "exponent from a different ring");
  HallElement r = g;
  const auto s = sigma(g.a, g.a, *g.schema);
  const Scalar c2 = binomial(mu, 2);
  for (auto& x : r.a) x *= mu;
  for (std::size_t l = 0; l < r.b.size(); ++l) r.b[l] = mu * g.b[l] + c2 * s[l];
  return r;
}

HallElement hall_commutator(const HallElement& g, const HallElement& h) {
  return hall_mul(hall_mul(hall_inv(g), hall_inv(h)), hall_mul(g, h));
}

HallElement tau2(std::span<const HallElement> xs) {
  if (xs.empty()) throw Error(ErrorKind::LengthMismatch, "tau2 of an empty list");
  HallElement acc = HallElement::identity(xs.front().schema, xs.front().ring);
  HallElement prefix = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = hall_mul(acc, hall_commutator(prefix, xs[i]));
    prefix = hall_mul(prefix, xs[i]);
  }
  return acc;
}

std::string to_string(const HallElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.a.size(); ++i) out += (i ? "," : "") + g.a[i].to_string();
  out += ";";
  for (std::size_t i = 0; i < g.b.size(); ++i) out += (i ? "," : "") + g.b[i].to_string();
  return out + ")";
}

}  // namespace nil2
